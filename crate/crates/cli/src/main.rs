use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use pawnmax_core::oracle::for_each_max_arrangement;
use pawnmax_core::verify::{self, Fault, Tables};
use pawnmax_core::{
    arrangement_count, count_max_arrangements, count_via_strip_chains, phi, phi_inverse, rank,
    unrank, Board, StripMatrix, SubsetPair,
};

/// Count, build, encode and verify maximum nonattacking pawn arrangements.
#[derive(Debug, Parser)]
#[command(name = "pawnmax", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Closed form C(m+n, n)^2; even sides only.
    Formula,
    /// Profile dynamic programming over the raw attack rule.
    Dp,
    /// Monotone chains of strip-matrix indices; even sides only.
    Chains,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the number of maximum arrangements.
    Count {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value = "dp")]
        method: Method,
    },
    /// Build the arrangement for a pair of row and column subsets.
    Decode {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Row subset, comma separated.
        #[arg(short = 'R', long = "r-list", value_delimiter = ',', required = true)]
        r_list: Vec<usize>,
        /// Column subset, comma separated.
        #[arg(short = 'C', long = "c-list", value_delimiter = ',', required = true)]
        c_list: Vec<usize>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Recover the subset pair of a board file (JSON or ASCII, `-` for stdin).
    Encode { board_file: PathBuf },
    /// Print the strip matrix for strips of width m.
    Strips {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
        /// Draw pawns instead of square-type words (ascii only).
        #[arg(long)]
        diagrams: bool,
    },
    /// List every maximum arrangement in canonical order.
    Enumerate {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Print the rank of a board file.
    Rank { board_file: PathBuf },
    /// Print the arrangement with the given rank.
    Unrank {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        index: BigUint,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Cross-check every identity for all n + m <= max-semi.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_semi: usize,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

const USAGE_ERROR: u8 = 1;
const VERIFY_FAILURE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(USAGE_ERROR);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn half_sizes(rows: usize, cols: usize) -> Result<(usize, usize)> {
    if rows == 0 || cols == 0 {
        bail!("board sizes must be positive, got {rows}x{cols}");
    }
    if !rows.is_multiple_of(2) || !cols.is_multiple_of(2) {
        bail!("odd dimensions {rows}x{cols}: this needs even sides");
    }
    Ok((rows / 2, cols / 2))
}

fn read_board(path: &Path) -> Result<Board> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(Board::parse(&text)?)
}

fn render(board: &Board, format: Format) -> String {
    match format {
        Format::Ascii => board.render_ascii(),
        Format::Json => board.to_json() + "\n",
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Count { rows, cols, method } => {
            let count = match method {
                Method::Dp => count_max_arrangements(rows, cols)?.num_max_arrangements,
                Method::Formula => {
                    let (n, m) = half_sizes(rows, cols)?;
                    arrangement_count(n, m)
                }
                Method::Chains => {
                    let (n, m) = half_sizes(rows, cols)?;
                    count_via_strip_chains(n, m)
                }
            };
            writeln!(out, "{count}")?;
        }
        Command::Decode {
            rows,
            cols,
            r_list,
            c_list,
            format,
        } => {
            let (n, m) = half_sizes(rows, cols)?;
            let pair = SubsetPair::new(n, m, r_list, c_list)?;
            write!(out, "{}", render(&phi(&pair), format))?;
        }
        Command::Encode { board_file } => {
            let board = read_board(&board_file)?;
            writeln!(out, "{}", phi_inverse(&board)?.to_json())?;
        }
        Command::Strips {
            m,
            format,
            diagrams,
        } => {
            let matrix = StripMatrix::build(m)?;
            let text = match (format, diagrams) {
                (Format::Json, _) => matrix.to_json() + "\n",
                (Format::Ascii, false) => matrix.render_words(),
                (Format::Ascii, true) => matrix.render_ascii(),
            };
            write!(out, "{text}")?;
        }
        Command::Enumerate {
            rows,
            cols,
            limit,
            format,
        } => {
            let limit = limit.unwrap_or(usize::MAX);
            let mut emitted = 0usize;
            let mut failure = None;
            for_each_max_arrangement(rows, cols, |board| {
                if emitted >= limit || failure.is_some() {
                    return;
                }
                let sep = if emitted > 0 && format == Format::Ascii {
                    "\n"
                } else {
                    ""
                };
                if let Err(e) = write!(out, "{sep}{}", render(&board, format)) {
                    failure = Some(e);
                }
                emitted += 1;
            })?;
            if let Some(e) = failure {
                return Err(e.into());
            }
        }
        Command::Rank { board_file } => {
            let board = read_board(&board_file)?;
            writeln!(out, "{}", rank(&board)?)?;
        }
        Command::Unrank {
            rows,
            cols,
            index,
            format,
        } => {
            let (n, m) = half_sizes(rows, cols)?;
            write!(out, "{}", render(&unrank(&index, n, m)?, format))?;
        }
        Command::Verify {
            max_semi,
            inject_fault,
        } => {
            if !(verify::MIN_SEMI..=verify::MAX_SEMI).contains(&max_semi) {
                bail!(
                    "--max-semi must lie in {}..={}, got {max_semi}",
                    verify::MIN_SEMI,
                    verify::MAX_SEMI
                );
            }
            let tables = match inject_fault.as_deref() {
                None => Tables::default(),
                Some(name) => match Fault::parse(name) {
                    Some(f) => f.tables(),
                    None => bail!("unknown fault {name:?}"),
                },
            };
            let report = verify::run(max_semi, &tables);
            for check in &report.checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: {}", check.name, check.detail)?;
            }
            out.flush()?;
            if let Some(failed) = report.first_failure() {
                eprintln!("verification failed: {}: {}", failed.name, failed.detail);
                return Ok(ExitCode::from(VERIFY_FAILURE));
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}
