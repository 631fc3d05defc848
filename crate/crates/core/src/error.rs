use alloc::boxed::Box;
use alloc::string::String;

use num_rational::BigRational;
use thiserror::Error;

use crate::lie::Family;

/// Errors raised by the counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The rank is not allowed for the family (A needs ≥ 1, D needs ≥ 3, E is 6, 7 or 8).
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank {
        /// Requested family.
        family: Family,
        /// Requested rank.
        rank: u32,
    },
    /// An algebra name could not be parsed.
    #[error("cannot parse algebra name {0:?}")]
    BadAlgebraName(String),
    /// A series was requested with truncation order zero.
    #[error("truncation order must be at least 1")]
    ZeroTruncation,
    /// `1/(1 - m)` was requested for a monomial with no z-degree and no λ-exponent.
    #[error("geometric series of a constant monomial is not a formal series")]
    DegenerateMonomial,
    /// Ω was applied to a variable whose expansion was cut at the λ-window edge
    /// without a losslessness certificate.
    #[error("λ-window too narrow for lossless extraction in variable {0}")]
    WindowTooNarrow(usize),
    /// The truncated Ω expansion grew past its term budget.
    #[error("Ω expansion exceeded the budget of {0} terms")]
    WindowOverflow(usize),
    /// The Ω pipeline refuses ranks above its configured limit.
    #[error("rank {rank} exceeds the Ω pipeline limit of {limit}")]
    UnsupportedRank {
        /// Requested rank.
        rank: u32,
        /// Configured limit.
        limit: u32,
    },
    /// None of the three cases of the ∨ operator applies.
    #[error("∨ is undefined for {} and {}", .0.0, .0.1)]
    VeeUndefined(Box<(BigRational, BigRational)>),
    /// The dicyclic closed form only exists for even `N ≥ 2`.
    #[error("dicyclic closed form requires even N >= 2, got {0}")]
    OddDicyclic(u32),
    /// A cross-check between two exact computations failed.
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
