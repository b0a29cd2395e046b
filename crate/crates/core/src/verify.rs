//! Cross-checks of every counting identity, run for all `n + m <= max_semi`.
//!
//! The strip tables are passed in so a deliberately broken table can be
//! shown to make the run fail.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::bijection::{
    arrangement_count, phi, phi_inverse_with, rank_pair, unrank_pair, SubsetPair,
};
use crate::board::Board;
use crate::error::StripError;
use crate::oracle::{
    count_max_arrangements, count_via_strip_chains, enumerate_max_arrangements, max_pawn_count,
};
use crate::strip::{
    can_follow, can_stack_strips, enumerate_strips, strip_entry, SquareType, Strip, StripMatrix,
};

/// Smallest and largest accepted `max_semi`.
pub const MIN_SEMI: usize = 2;
pub const MAX_SEMI: usize = 8;

type EntryFn = fn(usize, usize, usize) -> Result<Strip, StripError>;

/// The strip tables under test.
#[derive(Clone, Copy)]
pub struct Tables {
    pub descend: fn(SquareType) -> SquareType,
    pub entry: EntryFn,
}

impl Default for Tables {
    fn default() -> Self {
        Tables {
            descend: SquareType::descend,
            entry: strip_entry,
        }
    }
}

/// Deliberately broken tables for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// `A` maps to itself instead of `D`.
    Descend,
    /// Entry `(1, 1)` is replaced by entry `(1, 2)`.
    Entry,
}

impl Fault {
    pub fn parse(name: &str) -> Option<Fault> {
        match name {
            "descend" => Some(Fault::Descend),
            "entry" => Some(Fault::Entry),
            _ => None,
        }
    }

    pub fn tables(self) -> Tables {
        fn bad_descend(t: SquareType) -> SquareType {
            match t {
                SquareType::A => SquareType::A,
                other => other.descend(),
            }
        }
        fn bad_entry(m: usize, i: usize, j: usize) -> Result<Strip, StripError> {
            if (i, j) == (1, 1) {
                strip_entry(m, 1, 2)
            } else {
                strip_entry(m, i, j)
            }
        }
        match self {
            Fault::Descend => Tables {
                descend: bad_descend,
                ..Tables::default()
            },
            Fault::Entry => Tables {
                entry: bad_entry,
                ..Tables::default()
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type CheckResult = Result<String, String>;
type NamedCheck<'a> = (&'static str, Box<dyn Fn() -> CheckResult + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(tables: &Tables, m: usize) -> Result<StripMatrix, String> {
    StripMatrix::build_with(m, tables.entry).map_err(|e| e.to_string())
}

/// Runs every check for `n, m >= 1` with `n + m <= max_semi`.
pub fn run(max_semi: usize, tables: &Tables) -> Report {
    assert!(
        (MIN_SEMI..=MAX_SEMI).contains(&max_semi),
        "max_semi must lie in {MIN_SEMI}..={MAX_SEMI}"
    );
    let max_m = max_semi - 1;
    let checks: Vec<NamedCheck<'_>> = vec![
        (
            "strip census",
            Box::new(move || strip_census(tables, max_m)),
        ),
        ("descend law", Box::new(move || descend_law(tables))),
        ("follow table", Box::new(follow_table)),
        ("action laws", Box::new(move || action_laws(tables, max_m))),
        (
            "dominance law",
            Box::new(move || dominance_law(tables, max_m)),
        ),
        (
            "bound achievement",
            Box::new(move || bound_achievement(max_semi)),
        ),
        (
            "three-way counts",
            Box::new(move || three_way_counts(max_semi)),
        ),
        (
            "bijection totality",
            Box::new(move || bijection_totality(max_semi)),
        ),
        ("worked examples", Box::new(worked_examples)),
        ("odd boards", Box::new(odd_boards)),
        ("rank codec", Box::new(move || rank_codec(max_semi))),
    ];
    let checks = checks
        .into_iter()
        .map(|(name, check)| {
            let (passed, detail) = match check() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckOutcome {
                name,
                passed,
                detail,
            }
        })
        .collect();
    Report { checks }
}

fn pairs_up_to(max_semi: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..max_semi).flat_map(move |n| (1..=max_semi - n).map(move |m| (n, m)))
}

pub fn strip_census(tables: &Tables, max_m: usize) -> CheckResult {
    for m in 1..=max_m {
        let found = enumerate_strips(m).map_err(|e| e.to_string())?;
        ensure(found.len() == (m + 1) * (m + 1), || {
            format!(
                "m={m}: {} strips, expected {}",
                found.len(),
                (m + 1) * (m + 1)
            )
        })?;
        let matrix = build(tables, m)?;
        ensure(matrix.has_distinct_entries(), || {
            format!("m={m}: repeated matrix entry")
        })?;
        let mut entries = matrix.entries().to_vec();
        entries.sort();
        ensure(entries == found, || {
            format!("m={m}: matrix differs from census")
        })?;
    }
    Ok(format!("m=1..={max_m}"))
}

pub fn descend_law(tables: &Tables) -> CheckResult {
    for t in SquareType::ALL {
        let twice = (tables.descend)((tables.descend)(t));
        ensure(twice == SquareType::C, || {
            format!("f(f({t:?})) = {twice:?}")
        })?;
    }
    ensure((tables.descend)(SquareType::A) == SquareType::D, || {
        "f(A) != D".into()
    })?;
    Ok("f(f(t)) = C".into())
}

pub fn follow_table() -> CheckResult {
    use SquareType::{A, B, C, D};
    let table: [(SquareType, &[SquareType]); 4] =
        [(A, &[A, B]), (B, &[B]), (C, &[B, C]), (D, &[A, B, C, D])];
    for (left, allowed) in table {
        for right in SquareType::ALL {
            ensure(can_follow(left, right) == allowed.contains(&right), || {
                format!("{left:?} then {right:?}")
            })?;
        }
    }
    Ok("16 cases".into())
}

pub fn action_laws(tables: &Tables, max_m: usize) -> CheckResult {
    use SquareType::{A, B, C, D};
    for m in 1..=max_m {
        let matrix = build(tables, m)?;
        let side = m + 1;
        for i in 1..=side {
            for j in 1..=side {
                let here = matrix.get(i, j).map_err(|e| e.to_string())?;
                for i2 in i + 1..=side {
                    let below = matrix.get(i2, j).map_err(|e| e.to_string())?;
                    for (x, y) in here.word().iter().zip(below.word()) {
                        ensure(x == y || (*x, *y) == (A, D) || (*x, *y) == (B, C), || {
                            format!("m={m}: column {j}, rows {i}->{i2}: {x:?}->{y:?}")
                        })?;
                    }
                }
                for j2 in j + 1..=side {
                    let right = matrix.get(i, j2).map_err(|e| e.to_string())?;
                    for (x, y) in here.word().iter().zip(right.word()) {
                        ensure(x == y || (*x, *y) == (A, B) || (*x, *y) == (D, C), || {
                            format!("m={m}: row {i}, columns {j}->{j2}: {x:?}->{y:?}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!("m=1..={max_m}"))
}

pub fn dominance_law(tables: &Tables, max_m: usize) -> CheckResult {
    for m in 1..=max_m {
        let matrix = build(tables, m)?;
        for ((i, j), top) in matrix.indexed() {
            for ((i2, j2), bottom) in matrix.indexed() {
                let stacks = can_stack_strips(top, bottom).map_err(|e| e.to_string())?;
                ensure(stacks == (i <= i2 && j <= j2), || {
                    format!("m={m}: ({i},{j}) above ({i2},{j2}) stacks={stacks}")
                })?;
            }
        }
    }
    Ok(format!("m=1..={max_m}"))
}

pub fn bound_achievement(max_semi: usize) -> CheckResult {
    for (n, m) in pairs_up_to(max_semi) {
        let max = max_pawn_count(2 * n, 2 * m).map_err(|e| e.to_string())?;
        ensure(max == 2 * n * m, || {
            format!("{}x{}: max {max}", 2 * n, 2 * m)
        })?;
    }
    Ok(format!("n+m<={max_semi}"))
}

pub fn three_way_counts(max_semi: usize) -> CheckResult {
    for (n, m) in pairs_up_to(max_semi) {
        let dp = count_max_arrangements(2 * n, 2 * m)
            .map_err(|e| e.to_string())?
            .num_max_arrangements;
        let chains = count_via_strip_chains(n, m);
        let formula = arrangement_count(n, m);
        ensure(dp == formula && chains == formula, || {
            format!("n={n} m={m}: dp={dp} chains={chains} formula={formula}")
        })?;
    }
    Ok(format!("n+m<={max_semi}"))
}

pub fn bijection_totality(max_semi: usize) -> CheckResult {
    let mut boards = 0usize;
    for (n, m) in pairs_up_to(max_semi) {
        let matrix = StripMatrix::build(m).map_err(|e| e.to_string())?;
        let mut image = HashSet::new();
        for p in SubsetPair::all(n, m) {
            let b = phi(&p);
            let back = phi_inverse_with(&b, &matrix).map_err(|e| format!("{e}"))?;
            ensure(back == p, || {
                format!("n={n} m={m}: inverse of {} differs", p.to_json())
            })?;
            ensure(image.insert(b), || {
                format!("n={n} m={m}: {} collides", p.to_json())
            })?;
        }
        let oracle: HashSet<Board> = enumerate_max_arrangements(2 * n, 2 * m)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        ensure(image == oracle, || {
            format!(
                "n={n} m={m}: image {} vs oracle {}",
                image.len(),
                oracle.len()
            )
        })?;
        boards += image.len();
    }
    Ok(format!("{boards} boards"))
}

pub fn worked_examples() -> CheckResult {
    use crate::bijection::subsets_to_index_seq;
    type Case<'a> = (usize, &'a [usize], &'a [usize], &'a [(usize, usize)]);
    let cases: [Case<'_>; 2] = [
        (3, &[1, 4, 5], &[2, 4, 6], &[(1, 2), (3, 3), (3, 4)]),
        (
            4,
            &[2, 3, 4, 8],
            &[1, 6, 7, 8],
            &[(2, 1), (2, 5), (2, 5), (5, 5)],
        ),
    ];
    for (m, r, c, expected) in cases {
        let p = SubsetPair::new(m, m, r.to_vec(), c.to_vec()).map_err(|e| e.to_string())?;
        let seq = subsets_to_index_seq(&p);
        ensure(seq.pairs() == expected, || {
            format!("{}: got {:?}", p.to_json(), seq.pairs())
        })?;
        let board = Board::from_json(&phi(&p).to_json()).map_err(|e| e.to_string())?;
        let back = crate::bijection::phi_inverse(&board).map_err(|e| e.to_string())?;
        ensure(back.to_json() == p.to_json(), || {
            format!("{} round trip", p.to_json())
        })?;
    }
    Ok("2 examples".into())
}

pub fn odd_boards() -> CheckResult {
    for k in [3usize, 5, 7] {
        let count = count_max_arrangements(k, k)
            .map_err(|e| e.to_string())?
            .num_max_arrangements;
        ensure(count == BigUint::from(2u32), || {
            format!("{k}x{k}: {count} arrangements")
        })?;
    }
    Ok("k=3,5,7".into())
}

pub fn rank_codec(max_semi: usize) -> CheckResult {
    for (n, m) in pairs_up_to(max_semi) {
        let total = arrangement_count(n, m);
        let mut k = BigUint::default();
        while k < total {
            let p = unrank_pair(&k, n, m).map_err(|e| e.to_string())?;
            ensure(rank_pair(&p) == k, || format!("n={n} m={m}: rank {k}"))?;
            k += 1u32;
        }
    }
    Ok(format!("n+m<={max_semi}"))
}
