//! MacMahon's Ω operators on truncated Laurent series, and the Ehrhart series
//! of `Q_g` computed from the slack-form constraint matrix.
//!
//! `Ω_=` keeps the terms free of a chosen λ; `Ω_≥` keeps the terms with a
//! nonnegative exponent of it and then sets it to 1. Both act on expansions
//! held in a [`MultiLaurent`], so they are exact up to the z-truncation as long
//! as no λ-exponent was cut at the window edge. A cut is tolerated only when
//! the window is certified.
//!
//! For the pipeline the certificate comes from the polytope itself. Every
//! point of the `T`-th dilate has `x_i ≤ T·u_i` (see
//! [`root_space_ratios`]) and slack `y_i ≤ T / c_i`. Each geometric factor is
//! expanded exactly to those powers, and the λ-window is the range that any
//! product of such capped expansions can reach. No term that could contribute
//! to `λ^0 z^{≤T}` is ever lost.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::lie::{AlgebraId, LieData};
use crate::polytope::{build_constraints, root_space_ratios};
use crate::series::laurent::DEFAULT_TERM_BUDGET;
use crate::series::{geometric_expand, Monomial, MultiLaurent, PowerSeries, Window};
use crate::{Error, Result};

/// Default largest rank accepted by [`ehrhart_series_omega`].
pub const DEFAULT_MAX_RANK: u32 = 6;

/// One factor `1/(1 - m)`, optionally expanded only up to `m^max_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// The monomial `m`.
    pub monomial: Monomial,
    /// Highest power kept; `None` expands until the window is left.
    pub max_power: Option<u32>,
}

/// `Π_i 1/(1 - m_i)` over a shared window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaExpr {
    window: Window,
    n_z: usize,
    factors: Vec<Factor>,
}

impl OmegaExpr {
    /// The empty product.
    pub fn new(window: Window, n_z: usize) -> Self {
        Self {
            window,
            n_z,
            factors: Vec::new(),
        }
    }

    /// Appends `1/(1 - m)`.
    pub fn factor(self, m: Monomial) -> Result<Self> {
        self.push(m, None)
    }

    /// Appends `1 + m + ... + m^max_power`.
    pub fn capped_factor(self, m: Monomial, max_power: u32) -> Result<Self> {
        self.push(m, Some(max_power))
    }

    fn push(mut self, m: Monomial, max_power: Option<u32>) -> Result<Self> {
        assert_eq!(m.z.len(), self.n_z, "z arity mismatch");
        assert_eq!(m.lambda.len(), self.window.n_lambda(), "λ arity mismatch");
        if m.z_degree() == 0 && m.lambda.iter().all(|&e| e == 0) {
            return Err(Error::DegenerateMonomial);
        }
        self.factors.push(Factor { monomial: m, max_power });
        Ok(self)
    }

    /// The factors.
    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The window.
    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Expansion of a single factor.
    pub fn expand_factor(&self, f: &Factor) -> Result<MultiLaurent> {
        match f.max_power {
            None => geometric_expand(&f.monomial, &self.window, self.n_z),
            Some(cap) => {
                let mut powers = Vec::with_capacity(cap as usize + 1);
                let mut coeff = BigRational::one();
                for k in 0..=cap as i64 {
                    let z: Vec<u32> = f.monomial.z.iter().map(|&e| e * k as u32).collect();
                    if z.iter().sum::<u32>() > self.window.z_max() {
                        break;
                    }
                    let lambda = f.monomial.lambda.iter().map(|&e| e * k as i32).collect();
                    powers.push(Monomial::new(z, lambda).with_coeff(coeff.clone()));
                    coeff *= &f.monomial.coeff;
                }
                Ok(MultiLaurent::from_monomials(self.window.clone(), self.n_z, &powers))
            }
        }
    }

    /// The full truncated product.
    pub fn expand(&self) -> Result<MultiLaurent> {
        self.factors
            .iter()
            .try_fold(MultiLaurent::one(self.window.clone(), self.n_z), |acc, f| {
                acc.mul(&self.expand_factor(f)?)
            })
    }
}

fn check_lossless(expr: &MultiLaurent, var: usize) -> Result<()> {
    if expr.is_truncated(var) && !expr.window().is_certified() {
        return Err(Error::WindowTooNarrow(var));
    }
    Ok(())
}

/// `Ω_=` in `λ_var`: the `λ_var^0` part.
///
/// The eliminated variable keeps its slot with exponent 0 throughout.
pub fn omega_eq(expr: &MultiLaurent, var: usize) -> Result<MultiLaurent> {
    check_lossless(expr, var)?;
    Ok(expr.retain_lambda(var, |e| e == 0))
}

/// `Ω_≥` in `λ_var`: nonnegative powers of `λ_var`, then `λ_var = 1`.
pub fn omega_geq(expr: &MultiLaurent, var: usize) -> Result<MultiLaurent> {
    check_lossless(expr, var)?;
    Ok(expr.retain_lambda(var, |e| e >= 0).set_lambda_one(var))
}

/// Knobs for [`ehrhart_series_omega_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaOptions {
    /// Largest rank accepted.
    pub max_rank: u32,
    /// Term budget for every intermediate product.
    pub term_budget: usize,
    /// Order in which `λ_1..λ_r` are eliminated; `None` is `0..r`.
    pub order: Option<Vec<usize>>,
}

impl Default for OmegaOptions {
    fn default() -> Self {
        Self {
            max_rank: DEFAULT_MAX_RANK,
            term_budget: DEFAULT_TERM_BUDGET,
            order: None,
        }
    }
}

/// `Ehr_{Q_g}(z)` to order `t` via `Ω_=` applied to the slack-form system.
pub fn ehrhart_series_omega(a: AlgebraId, t: usize) -> Result<PowerSeries> {
    ehrhart_series_omega_with(a, t, &OmegaOptions::default())
}

/// [`ehrhart_series_omega`] with explicit options.
pub fn ehrhart_series_omega_with(a: AlgebraId, t: usize, opts: &OmegaOptions) -> Result<PowerSeries> {
    if t == 0 {
        return Err(Error::ZeroTruncation);
    }
    if a.rank() > opts.max_rank {
        return Err(Error::UnsupportedRank {
            rank: a.rank(),
            limit: opts.max_rank,
        });
    }
    let r = a.dim();
    let order = opts.order.clone().unwrap_or_else(|| (0..r).collect());
    assert!(
        {
            let mut sorted = order.clone();
            sorted.sort_unstable();
            sorted == (0..r).collect::<Vec<_>>()
        },
        "elimination order must be a permutation of 0..r"
    );

    let data = LieData::new(a);
    let sys = build_constraints(a, t as u64);
    let rows = sys.integer_rows();
    let big_t = BigRational::from_integer(BigInt::from(t));
    let caps: Vec<u32> = root_space_ratios(&data)
        .iter()
        .map(|u| (u * &big_t).floor().to_integer().to_u32().expect("cap fits"))
        .chain(data.marks.iter().map(|&c| t as u32 / c as u32))
        .chain(core::iter::once(t as u32))
        .collect();

    let mut window = Window::new(t as u32, r).with_term_budget(opts.term_budget);
    for (i, row) in rows.iter().take(r).enumerate() {
        let (mut lo, mut hi) = (0i64, 0i64);
        for (a_ij, &cap) in row.iter().zip(&caps) {
            let reach = a_ij * cap as i64;
            if reach < 0 {
                lo += reach;
            } else {
                hi += reach;
            }
        }
        window = window.with_lambda_range(i, lo as i32, hi as i32);
    }
    let window = window.certified();

    let mut expr = OmegaExpr::new(window.clone(), 1);
    for (col, &cap) in caps.iter().enumerate() {
        let lambda = rows[..r].iter().map(|row| row[col] as i32).collect();
        let m = Monomial::new(vec![rows[r][col] as u32], lambda);
        expr = expr.capped_factor(m, cap)?;
    }

    // Multiply each factor in just before the first variable it involves is
    // eliminated, then eliminate.
    let mut pending: Vec<&Factor> = expr.factors().iter().collect();
    let mut acc = MultiLaurent::one(window, 1);
    for &var in &order {
        let (now, later): (Vec<&Factor>, Vec<&Factor>) =
            pending.into_iter().partition(|f| f.monomial.lambda[var] != 0);
        pending = later;
        for f in now {
            acc = acc.mul(&expr.expand_factor(f)?)?;
        }
        acc = omega_eq(&acc, var)?;
    }
    for f in pending {
        acc = acc.mul(&expr.expand_factor(f)?)?;
    }
    acc.to_power_series()?.to_integer_series()
}
