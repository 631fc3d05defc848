//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ehrhart_core::AlgebraId;

use crate::CliError;

/// Root-lattice state counts for simply-laced Lie algebras.
#[derive(Debug, Parser)]
#[command(name = "ehrhart", version, about)]
pub struct Cli {
    /// What to do.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count states at a single level.
    Count(CountArgs),
    /// Print the truncated generating series.
    Series(SeriesArgs),
    /// Cross-check methods, dualities and recorded values.
    Verify(VerifyArgs),
    /// Counts for the standard list of algebras, one column per level.
    Table(TableArgs),
}

/// How a series is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Lattice-point enumeration.
    Brute,
    /// MacMahon Ω elimination.
    Omega,
    /// Closed-form generating function.
    Genfun,
    /// Counting unit-determinant representations of the McKay-dual group.
    Reps,
}

impl Method {
    /// Lower-case name used in output.
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Omega => "omega",
            Method::Genfun => "genfun",
            Method::Reps => "reps",
        }
    }
}

/// Output encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable.
    Text,
    /// One JSON document.
    Json,
    /// Comma-separated with a header row.
    Csv,
}

/// Which algebra, by name or by classical alias.
#[derive(Debug, Clone, Default, Args)]
#[group(multiple = false)]
pub struct AlgebraArgs {
    /// `A<n>`, `D<n>`, `E6`, `E7` or `E8`.
    #[arg(long)]
    pub algebra: Option<String>,
    /// su(N), i.e. A_{N-1}.
    #[arg(long, value_name = "N")]
    pub su: Option<u32>,
    /// so(M) with M even and at least 6, i.e. D_{M/2}.
    #[arg(long, value_name = "M")]
    pub so: Option<u32>,
}

impl AlgebraArgs {
    /// The selected algebra, if any.
    pub fn resolve(&self) -> Result<Option<AlgebraId>, CliError> {
        let parsed = match (&self.algebra, self.su, self.so) {
            (Some(name), _, _) => name.parse(),
            (_, Some(n), _) => AlgebraId::su(n),
            (_, _, Some(m)) => AlgebraId::so(m),
            _ => return Ok(None),
        };
        parsed.map(Some).map_err(|e| CliError::Usage(e.to_string()))
    }

    /// The selected algebra; a usage error if none was given.
    pub fn require(&self) -> Result<AlgebraId, CliError> {
        self.resolve()?
            .ok_or_else(|| CliError::Usage("one of --algebra, --su or --so is required".into()))
    }
}

/// Flags for `count`.
#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Level q.
    #[arg(long)]
    pub level: u64,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the rank limit of the Ω method.
    #[arg(long)]
    pub allow_large_rank: bool,
}

/// Flags for `series`.
#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Truncation order T (default 16; 8 for the Ω method at rank 4 and up).
    #[arg(long)]
    pub terms: Option<usize>,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the rank limit of the Ω method.
    #[arg(long)]
    pub allow_large_rank: bool,
}

/// What `verify` checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    /// All available methods agree coefficient by coefficient.
    Duality,
    /// Coefficient q of su(k) equals coefficient k of su(q).
    Levelrank,
    /// Total state count against the Weyl-group volume estimate.
    Asymptotic,
    /// Classical Ω identities as truncated series.
    OmegaIdentities,
    /// Determinants predicted from the inverse Cartan matrix mod 1.
    Determinants,
    /// Recorded series in the golden directory.
    Golden,
}

/// Flags for `verify`.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub mode: VerifyMode,
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Truncation order.
    #[arg(long)]
    pub terms: Option<usize>,
    /// Largest k and q for `levelrank`.
    #[arg(long)]
    pub max: Option<usize>,
    /// Level for `asymptotic`.
    #[arg(long)]
    pub level: Option<u64>,
    /// Allowed relative deviation for `asymptotic`, as a decimal or a fraction.
    #[arg(long)]
    pub tolerance: Option<String>,
    /// Rewrite the golden files from the current computation.
    #[arg(long)]
    pub bless: bool,
    /// Golden directory (defaults to the one shipped with the crate).
    #[arg(long)]
    pub golden_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the rank limit of the Ω method.
    #[arg(long)]
    pub allow_large_rank: bool,
}

/// Flags for `table`.
#[derive(Debug, Args)]
pub struct TableArgs {
    /// Largest level.
    #[arg(long, default_value_t = 10)]
    pub max: usize,
    #[arg(long, value_enum, default_value_t = Method::Brute)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
