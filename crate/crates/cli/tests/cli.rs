use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pawnmax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pawnmax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn pawnmax_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pawnmax"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn count_methods() {
    let o = pawnmax(&["count", "--rows", "4", "--cols", "4", "--method", "formula"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "36\n"));
    let o = pawnmax(&["count", "--rows", "3", "--cols", "3", "--method", "dp"]);
    assert_eq!(stdout(&o), "2\n");
    let o = pawnmax(&["count", "--rows", "3", "--cols", "3", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("odd dimensions"));
    for method in ["formula", "dp", "chains"] {
        let o = pawnmax(&["count", "--rows", "6", "--cols", "10", "--method", method]);
        assert_eq!(stdout(&o), "3136\n", "{method}");
    }
}

#[test]
fn decode_example_one() {
    let o = pawnmax(&[
        "decode", "--rows", "6", "--cols", "6", "-R", "1,4,5", "-C", "2,4,6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "PPPP.P\n.....P\nP....P\nP.PP.P\n.....P\nPPPP.P\n"
    );
    let o = pawnmax(&[
        "decode", "--rows", "2", "--cols", "2", "-R", "1", "-C", "1", "--format", "json",
    ]);
    assert_eq!(
        stdout(&o),
        "{\"rows\":2,\"cols\":2,\"pawns\":[[1,1],[1,2]]}\n"
    );
}

#[test]
fn decode_rejects_bad_subsets() {
    for args in [
        vec![
            "decode", "--rows", "4", "--cols", "4", "-R", "1", "-C", "1,2",
        ],
        vec![
            "decode", "--rows", "4", "--cols", "4", "-R", "1,5", "-C", "1,2",
        ],
        vec![
            "decode", "--rows", "4", "--cols", "4", "-R", "2,2", "-C", "1,2",
        ],
        vec!["decode", "--rows", "3", "--cols", "4", "-R", "1", "-C", "1"],
    ] {
        let o = pawnmax(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn decode_then_encode_example_two() {
    let d = pawnmax(&[
        "decode", "--rows", "8", "--cols", "8", "-R", "2,3,4,8", "-C", "1,6,7,8", "--format",
        "json",
    ]);
    let e = pawnmax_stdin(&["encode", "-"], &stdout(&d));
    assert_eq!(e.status.code(), Some(0));
    assert_eq!(
        stdout(&e),
        "{\"n\":4,\"m\":4,\"R\":[2,3,4,8],\"C\":[1,6,7,8]}\n"
    );

    let d = pawnmax(&[
        "decode", "--rows", "8", "--cols", "8", "-R", "2,3,4,8", "-C", "1,6,7,8",
    ]);
    let e = pawnmax_stdin(&["encode", "-"], &stdout(&d));
    assert_eq!(
        stdout(&e),
        "{\"n\":4,\"m\":4,\"R\":[2,3,4,8],\"C\":[1,6,7,8]}\n"
    );
}

#[test]
fn encode_errors() {
    let dir = tempfile::tempdir().unwrap();
    let attacking = dir.path().join("attacking.json");
    std::fs::write(&attacking, r#"{"rows":2,"cols":2,"pawns":[[1,1],[2,2]]}"#).unwrap();
    let o = pawnmax(&["encode", attacking.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not independent"), "{}", stderr(&o));
    assert!(stderr(&o).contains("(1,1)"));

    let odd = dir.path().join("odd.txt");
    std::fs::write(&odd, "P.P\n...\nP.P\n").unwrap();
    let o = pawnmax(&["encode", odd.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("odd dimensions"));

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{\"rows\":").unwrap();
    assert_eq!(
        pawnmax(&["encode", garbage.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        pawnmax(&["encode", "/nonexistent/board"]).status.code(),
        Some(1)
    );
}

#[test]
fn strips_grid() {
    let o = pawnmax(&["strips", "--m", "1"]);
    assert_eq!(stdout(&o), "A B\n\nD C\n");
    let o = pawnmax(&["strips", "--m", "3"]);
    let text = stdout(&o);
    assert!(text.starts_with("AAA AAB ABB BBB\n\n"));
    assert!(text.contains("DCB"));
    let o = pawnmax(&["strips", "--m", "1", "--format", "json"]);
    assert_eq!(
        stdout(&o),
        "{\"entries\":[[\"A\",\"B\"],[\"D\",\"C\"]],\"m\":1}\n"
    );
    assert_eq!(pawnmax(&["strips", "--m", "0"]).status.code(), Some(1));
}

#[test]
fn enumerate_and_limit() {
    let o = pawnmax(&["enumerate", "--rows", "2", "--cols", "2"]);
    assert_eq!(stdout(&o), "..\nPP\n\nP.\nP.\n\n.P\n.P\n\nPP\n..\n");
    let o = pawnmax(&[
        "enumerate",
        "--rows",
        "4",
        "--cols",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(stdout(&o).lines().count(), 36);
    let o = pawnmax(&[
        "enumerate",
        "--rows",
        "4",
        "--cols",
        "4",
        "--format",
        "json",
        "--limit",
        "3",
    ]);
    let all = pawnmax(&[
        "enumerate",
        "--rows",
        "4",
        "--cols",
        "4",
        "--format",
        "json",
    ]);
    let first3: Vec<_> = stdout(&all).lines().take(3).map(String::from).collect();
    assert_eq!(
        stdout(&o).lines().map(String::from).collect::<Vec<_>>(),
        first3
    );
    assert_eq!(
        pawnmax(&["enumerate", "--rows", "15", "--cols", "2"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn rank_and_unrank() {
    let first = pawnmax(&["unrank", "--rows", "4", "--cols", "4", "--index", "0"]);
    let phi = pawnmax(&[
        "decode", "--rows", "4", "--cols", "4", "-R", "1,2", "-C", "1,2",
    ]);
    assert_eq!(stdout(&first), stdout(&phi));

    let last = pawnmax(&[
        "unrank", "--rows", "4", "--cols", "4", "--index", "35", "--format", "json",
    ]);
    let r = pawnmax_stdin(&["rank", "-"], &stdout(&last));
    assert_eq!(stdout(&r), "35\n");

    let o = pawnmax(&["unrank", "--rows", "4", "--cols", "4", "--index", "36"]);
    assert_eq!(o.status.code(), Some(1));

    // ranks beyond 64 bits
    let big = "1000000000000000000000000";
    let o = pawnmax(&[
        "unrank", "--rows", "60", "--cols", "60", "--index", big, "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = pawnmax_stdin(&["rank", "-"], &stdout(&o));
    assert_eq!(stdout(&r), format!("{big}\n"));
}

#[test]
fn verify_exit_codes() {
    let o = pawnmax(&["verify", "--max-semi", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = stdout(&o);
    assert_eq!(report.lines().count(), 11);
    assert!(report.lines().all(|l| l.starts_with("PASS ")));

    assert_eq!(
        pawnmax(&["verify", "--max-semi", "1"]).status.code(),
        Some(1)
    );

    for fault in ["descend", "entry"] {
        let o = pawnmax(&["verify", "--max-semi", "3", "--inject-fault", fault]);
        assert_eq!(o.status.code(), Some(2), "{fault}");
        assert!(stderr(&o).starts_with("verification failed: "));
    }
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(pawnmax(&[]).status.code(), Some(1));
    assert_eq!(
        pawnmax(&["count", "--rows", "x", "--cols", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        pawnmax(&["count", "--rows", "2", "--cols", "2", "--method", "nope"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(pawnmax(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "enumerate",
        "--rows",
        "6",
        "--cols",
        "6",
        "--format",
        "json",
    ];
    assert_eq!(pawnmax(&args).stdout, pawnmax(&args).stdout);
}
