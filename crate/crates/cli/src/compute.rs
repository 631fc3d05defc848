//! Dispatch from a [`RunSpec`] to the library.

use ehrhart_core::mckay::rep_series;
use ehrhart_core::omega::{ehrhart_series_omega_with, OmegaOptions};
use ehrhart_core::polytope::ehrhart_series_bruteforce;
use ehrhart_core::series::{phi_dic_even_series, phi_su_series};
use ehrhart_core::{AlgebraId, Family, PowerSeries};

use crate::args::Method;
use crate::CliError;

/// Default truncation order.
pub const DEFAULT_TERMS: usize = 16;
/// Default truncation order for the Ω method at rank 4 and above.
pub const DEFAULT_OMEGA_TERMS: usize = 8;

/// One computation: algebra, method and truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunSpec {
    pub algebra: AlgebraId,
    pub method: Method,
    pub truncation: usize,
    pub allow_large_rank: bool,
}

impl RunSpec {
    /// A spec with the default truncation for `method`.
    pub fn new(algebra: AlgebraId, method: Method, terms: Option<usize>, allow_large_rank: bool) -> Self {
        Self {
            algebra,
            method,
            truncation: terms.unwrap_or_else(|| default_terms(algebra, method)),
            allow_large_rank,
        }
    }
}

/// 16, or 8 for Ω at rank ≥ 4.
pub fn default_terms(a: AlgebraId, method: Method) -> usize {
    if method == Method::Omega && a.rank() >= 4 {
        DEFAULT_OMEGA_TERMS
    } else {
        DEFAULT_TERMS
    }
}

/// Whether a closed form exists for `a`.
pub fn has_genfun(a: AlgebraId) -> bool {
    match a.family() {
        Family::A => true,
        Family::D => a.dicyclic_n().is_some_and(|n| n % 2 == 0),
        Family::E => false,
    }
}

/// Whether the Ω method accepts `a` under the given override.
pub fn omega_accepts(a: AlgebraId, allow_large_rank: bool) -> bool {
    allow_large_rank || a.rank() <= ehrhart_core::omega::DEFAULT_MAX_RANK
}

/// Computes the series described by `spec`.
pub fn compute(spec: &RunSpec) -> Result<PowerSeries, CliError> {
    let a = spec.algebra;
    let t = spec.truncation;
    let out = match spec.method {
        Method::Brute => ehrhart_series_bruteforce(a, t),
        Method::Reps => rep_series(a, t),
        Method::Omega => {
            let opts = OmegaOptions {
                max_rank: if spec.allow_large_rank { u32::MAX } else { OmegaOptions::default().max_rank },
                ..OmegaOptions::default()
            };
            ehrhart_series_omega_with(a, t, &opts)
        }
        Method::Genfun => match a.family() {
            Family::A => phi_su_series(a.rank() + 1, t),
            Family::D if has_genfun(a) => phi_dic_even_series(a.dicyclic_n().expect("D family"), t),
            _ => return Err(CliError::Usage(format!("no closed-form generating function for {a}"))),
        },
    };
    out.map_err(CliError::from)
}

/// `[z^q]` of the series, computing just enough terms.
pub fn count_at(a: AlgebraId, method: Method, q: u64, allow_large_rank: bool) -> Result<String, CliError> {
    let t = (q as usize).max(1);
    let series = compute(&RunSpec::new(a, method, Some(t), allow_large_rank))?;
    Ok(series.coeffs()[q as usize].to_string())
}
