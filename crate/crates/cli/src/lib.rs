//! Command-line front end for `ehrhart-core`.
//!
//! The binary is `ehrhart`; everything it does goes through [`run`], which
//! returns the text to print and the exit code, so the whole surface can be
//! driven from tests without spawning a process.
//!
//! Exit codes: 0 pass, 1 verification mismatch, 2 usage error, 3 internal
//! assertion.

pub mod args;
pub mod compute;
pub mod golden;
pub mod output;
pub mod report;
pub mod verify;

use ehrhart_core::AlgebraId;
use rayon::prelude::*;

pub use args::Cli;
use args::{Command, CountArgs, Format, Method, SeriesArgs, TableArgs};
use compute::{compute, count_at, has_genfun, omega_accepts, RunSpec};
use output::{count_rows, to_csv, to_json, CountRow, SeriesRecord};

/// Failure classes, each with its own exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Usage(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<ehrhart_core::Error> for CliError {
    fn from(e: ehrhart_core::Error) -> Self {
        match e {
            ehrhart_core::Error::Internal(msg) => CliError::Internal(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Text for stdout and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Count(args) => count(args),
        Command::Series(args) => series(args),
        Command::Verify(args) => {
            let report = verify::run(args)?;
            Ok(Outcome {
                stdout: report.render(args.format),
                code: if report.pass { 0 } else { 1 },
            })
        }
        Command::Table(args) => table(args),
    }
}

fn count(args: &CountArgs) -> Result<Outcome, CliError> {
    let a = args.algebra.require()?;
    let c = count_at(a, args.method, args.level, args.allow_large_rank)?;
    let stdout = match args.format {
        Format::Text => format!("{c}\n"),
        Format::Json => {
            let value = serde_json::json!({
                "algebra": a.to_string(),
                "method": args.method.name(),
                "level": args.level,
                "count": c,
            });
            to_json(&value) + "\n"
        }
        Format::Csv => to_csv(&[CountRow {
            algebra: a.to_string(),
            q: args.level as usize,
            count: c,
        }]),
    };
    Ok(Outcome::ok(stdout))
}

fn series(args: &SeriesArgs) -> Result<Outcome, CliError> {
    let a = args.algebra.require()?;
    let spec = RunSpec::new(a, args.method, args.terms, args.allow_large_rank);
    let s = compute(&spec)?;
    let stdout = match args.format {
        Format::Text => format!("{s}\n"),
        Format::Json => to_json(&SeriesRecord::new(a, args.method, &s)) + "\n",
        Format::Csv => to_csv(&count_rows(a, &s)),
    };
    Ok(Outcome::ok(stdout))
}

/// The algebras listed by `table`.
pub fn standard_algebras() -> Vec<AlgebraId> {
    ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"]
        .iter()
        .map(|s| s.parse().expect("valid name"))
        .collect()
}

fn table(args: &TableArgs) -> Result<Outcome, CliError> {
    if args.max == 0 {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let algebras: Vec<AlgebraId> = standard_algebras()
        .into_iter()
        .filter(|&a| match args.method {
            Method::Genfun => has_genfun(a),
            Method::Omega => omega_accepts(a, false),
            _ => true,
        })
        .collect();
    let all = algebras
        .par_iter()
        .map(|&a| compute(&RunSpec::new(a, args.method, Some(args.max), false)).map(|s| (a, s)))
        .collect::<Result<Vec<_>, _>>()?;
    let stdout = match args.format {
        Format::Csv => {
            let rows: Vec<CountRow> = all.iter().flat_map(|(a, s)| count_rows(*a, s)).collect();
            to_csv(&rows)
        }
        Format::Json => {
            let records: Vec<SeriesRecord> = all.iter().map(|(a, s)| SeriesRecord::new(*a, args.method, s)).collect();
            to_json(&records) + "\n"
        }
        Format::Text => {
            let mut grid: Vec<Vec<String>> =
                vec![core::iter::once("q".to_string()).chain((0..=args.max).map(|q| q.to_string())).collect()];
            for (a, s) in &all {
                grid.push(core::iter::once(a.to_string()).chain(s.coeffs().iter().map(ToString::to_string)).collect());
            }
            let widths: Vec<usize> = (0..grid[0].len())
                .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            grid.iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                    cells.join(" ") + "\n"
                })
                .collect()
        }
    };
    Ok(Outcome::ok(stdout))
}
