//! Truncated multivariate Laurent series in auxiliary variables `λ_1..λ_m`
//! (any integer exponent, within a window) and series variables `z_1..z_n`
//! (nonnegative exponents, total degree at most `z_max`).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::PowerSeries;
use crate::{Error, Result};

/// Default cap on the number of stored terms.
pub const DEFAULT_TERM_BUDGET: usize = 4_000_000;

/// Which exponents a [`MultiLaurent`] keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    z_max: u32,
    lambda: Vec<Option<(i32, i32)>>,
    certified: bool,
    max_terms: usize,
}

impl Window {
    /// Total z-degree at most `z_max`; every λ unbounded.
    pub fn new(z_max: u32, n_lambda: usize) -> Self {
        Self {
            z_max,
            lambda: vec![None; n_lambda],
            certified: false,
            max_terms: DEFAULT_TERM_BUDGET,
        }
    }

    /// Restricts `λ_var` to `lo..=hi`.
    pub fn with_lambda_range(mut self, var: usize, lo: i32, hi: i32) -> Self {
        assert!(lo <= 0 && 0 <= hi, "the window must contain λ^0");
        self.lambda[var] = Some((lo, hi));
        self
    }

    /// Marks the window as wide enough for exact `λ^0` extraction, so Ω may be
    /// applied even where expansions were cut at the λ edge.
    ///
    /// The caller vouches for this; see [`crate::omega`] for the argument
    /// used by the Ehrhart pipeline.
    pub fn certified(mut self) -> Self {
        self.certified = true;
        self
    }

    /// Overrides the term budget.
    pub fn with_term_budget(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    /// Largest total z-degree kept.
    pub fn z_max(&self) -> u32 {
        self.z_max
    }

    /// Number of λ variables.
    pub fn n_lambda(&self) -> usize {
        self.lambda.len()
    }

    /// Range of `λ_var`, if bounded.
    pub fn lambda_range(&self, var: usize) -> Option<(i32, i32)> {
        self.lambda[var]
    }

    /// Whether the window carries a losslessness certificate.
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    fn outside(&self, lambda: &[i32]) -> impl Iterator<Item = usize> + '_ {
        let lambda = lambda.to_vec();
        self.lambda.iter().enumerate().filter_map(move |(i, r)| match r {
            Some((lo, hi)) if lambda[i] < *lo || lambda[i] > *hi => Some(i),
            _ => None,
        })
    }
}

/// `coeff · λ^lambda · z^z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    /// Rational coefficient.
    pub coeff: BigRational,
    /// Exponents of the series variables.
    pub z: Vec<u32>,
    /// Exponents of the λ variables.
    pub lambda: Vec<i32>,
}

impl Monomial {
    /// Coefficient-one monomial.
    pub fn new(z: Vec<u32>, lambda: Vec<i32>) -> Self {
        Self {
            coeff: BigRational::one(),
            z,
            lambda,
        }
    }

    /// Sets the coefficient.
    pub fn with_coeff(mut self, coeff: BigRational) -> Self {
        self.coeff = coeff;
        self
    }

    /// Total z-degree.
    pub fn z_degree(&self) -> u32 {
        self.z.iter().sum()
    }
}

/// A sparse truncated Laurent series.
///
/// Keys are `λ` exponents followed by `z` exponents. `truncated[i]` records
/// that some term with z-degree within the window was dropped because `λ_i`
/// left its range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiLaurent {
    window: Window,
    n_z: usize,
    terms: BTreeMap<Vec<i32>, BigRational>,
    truncated: Vec<bool>,
}

impl MultiLaurent {
    /// The constant 1.
    pub fn one(window: Window, n_z: usize) -> Self {
        let n = window.n_lambda();
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; n + n_z], BigRational::one());
        Self {
            truncated: vec![false; n],
            window,
            n_z,
            terms,
        }
    }

    /// Builds a series from explicit monomials; terms outside the window are
    /// dropped (and flagged when the z-degree fits).
    pub fn from_monomials(window: Window, n_z: usize, monomials: &[Monomial]) -> Self {
        let mut out = Self::one(window, n_z);
        out.terms.clear();
        for m in monomials {
            out.insert(&m.lambda, &m.z, m.coeff.clone());
        }
        out
    }

    /// The window.
    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Number of λ variables.
    pub fn n_lambda(&self) -> usize {
        self.window.n_lambda()
    }

    /// Number of z variables.
    pub fn n_z(&self) -> usize {
        self.n_z
    }

    /// Number of stored nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when no terms are stored.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether `λ_var` was cut at its window edge somewhere.
    pub fn is_truncated(&self, var: usize) -> bool {
        self.truncated[var]
    }

    /// Coefficient of `λ^lambda z^z`.
    pub fn coeff(&self, lambda: &[i32], z: &[u32]) -> BigRational {
        let key = Self::key(lambda, z);
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterates `(λ exponents, z exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], Vec<u32>, &BigRational)> {
        let n = self.n_lambda();
        self.terms
            .iter()
            .map(move |(k, c)| (&k[..n], k[n..].iter().map(|&e| e as u32).collect(), c))
    }

    /// True when no stored term has a nonzero exponent of `λ_var`.
    pub fn is_free_of(&self, var: usize) -> bool {
        self.terms.keys().all(|k| k[var] == 0)
    }

    fn key(lambda: &[i32], z: &[u32]) -> Vec<i32> {
        lambda.iter().copied().chain(z.iter().map(|&e| e as i32)).collect()
    }

    fn insert(&mut self, lambda: &[i32], z: &[u32], c: BigRational) {
        if z.iter().sum::<u32>() > self.window.z_max {
            return;
        }
        let mut out = false;
        for var in self.window.outside(lambda) {
            self.truncated[var] = true;
            out = true;
        }
        if out || c.is_zero() {
            return;
        }
        let key = Self::key(lambda, z);
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            let key = Self::key(lambda, z);
            self.terms.remove(&key);
        }
    }

    /// Truncated product. Both operands must share the window shape.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.n_lambda(), other.n_lambda(), "λ arity mismatch");
        assert_eq!(self.n_z, other.n_z, "z arity mismatch");
        let n = self.n_lambda();
        let mut out = Self::one(self.window.clone(), self.n_z);
        out.terms.clear();
        for (var, flag) in out.truncated.iter_mut().enumerate() {
            *flag = self.truncated[var] || other.truncated[var];
        }
        let mut lambda = vec![0i32; n];
        let mut z = vec![0u32; self.n_z];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                for i in 0..n {
                    lambda[i] = ka[i] + kb[i];
                }
                for j in 0..self.n_z {
                    z[j] = (ka[n + j] + kb[n + j]) as u32;
                }
                out.insert(&lambda, &z, ca * cb);
            }
            if out.terms.len() > self.window.max_terms {
                return Err(Error::WindowOverflow(self.window.max_terms));
            }
        }
        Ok(out)
    }

    /// Keeps only terms whose `λ_var` exponent satisfies `keep`.
    pub(crate) fn retain_lambda(&self, var: usize, keep: impl Fn(i32) -> bool) -> Self {
        let mut out = self.clone();
        out.terms.retain(|k, _| keep(k[var]));
        out
    }

    /// Substitutes `λ_var = 1`, summing coefficients that collide.
    pub fn set_lambda_one(&self, var: usize) -> Self {
        let mut out = self.clone();
        out.terms.clear();
        for (k, c) in &self.terms {
            let mut key = k.clone();
            key[var] = 0;
            let slot = out.terms.entry(key.clone()).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                out.terms.remove(&key);
            }
        }
        out
    }

    /// Substitutes `λ_var → λ_var^{-1}`; the window range is mirrored.
    pub fn invert_lambda(&self, var: usize) -> Self {
        let mut out = self.clone();
        if let Some((lo, hi)) = self.window.lambda[var] {
            out.window.lambda[var] = Some((-hi, -lo));
        }
        out.terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut key = k.clone();
                key[var] = -key[var];
                (key, c.clone())
            })
            .collect();
        out
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (var, flag) in out.truncated.iter_mut().enumerate() {
            *flag |= other.truncated[var];
        }
        let n = self.n_lambda();
        for (k, c) in &other.terms {
            let z: Vec<u32> = k[n..].iter().map(|&e| e as u32).collect();
            out.insert(&k[..n], &z, c.clone());
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c = -c.clone());
        out
    }

    /// Reads off a univariate series in the single z variable; every stored
    /// term must be free of λ.
    pub fn to_power_series(&self) -> Result<PowerSeries<BigRational>> {
        assert_eq!(self.n_z, 1, "expected exactly one z variable");
        let n = self.n_lambda();
        let mut coeffs = vec![BigRational::zero(); self.window.z_max as usize + 1];
        for (k, c) in &self.terms {
            if k[..n].iter().any(|&e| e != 0) {
                return Err(Error::Internal(alloc::format!(
                    "term with λ-exponents {:?} survived elimination",
                    &k[..n]
                )));
            }
            coeffs[k[n] as usize] += c;
        }
        Ok(PowerSeries::from_coeffs(coeffs))
    }
}

/// `1/(1 - m)` expanded inside `window`.
///
/// Powers of `m` are generated until the z-degree or some λ exponent leaves
/// the window. A monomial without z-degree needs a bounded range for every λ
/// it involves; a monomial with neither z-degree nor λ-exponents is rejected.
pub fn geometric_expand(m: &Monomial, window: &Window, n_z: usize) -> Result<MultiLaurent> {
    assert_eq!(m.z.len(), n_z, "z arity mismatch");
    assert_eq!(m.lambda.len(), window.n_lambda(), "λ arity mismatch");
    let zdeg = m.z_degree();
    if zdeg == 0 {
        if m.lambda.iter().all(|&e| e == 0) {
            return Err(Error::DegenerateMonomial);
        }
        if let Some(var) = (0..m.lambda.len()).find(|&i| m.lambda[i] != 0 && window.lambda[i].is_none()) {
            return Err(Error::WindowTooNarrow(var));
        }
    }
    let mut out = MultiLaurent::one(window.clone(), n_z);
    out.terms.clear();
    let mut k: i64 = 0;
    let mut coeff = BigRational::one();
    loop {
        if (k as u64) * (zdeg as u64) > window.z_max as u64 {
            break;
        }
        let lambda: Vec<i32> = m.lambda.iter().map(|&e| (e as i64 * k) as i32).collect();
        let z: Vec<u32> = m.z.iter().map(|&e| (e as i64 * k) as u32).collect();
        let leaving: Vec<usize> = window.outside(&lambda).collect();
        if !leaving.is_empty() {
            for var in leaving {
                out.truncated[var] = true;
            }
            break;
        }
        out.insert(&lambda, &z, coeff.clone());
        coeff *= &m.coeff;
        k += 1;
        if out.terms.len() > window.max_terms {
            return Err(Error::WindowOverflow(window.max_terms));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn geometric_in_z() {
        let w = Window::new(3, 0);
        let s = geometric_expand(&Monomial::new(vec![1], vec![]), &w, 1).unwrap();
        assert_eq!(s.to_power_series().unwrap().coeffs(), &[q(1), q(1), q(1), q(1)]);
    }

    #[test]
    fn geometric_with_lambda() {
        let w = Window::new(4, 1);
        let s = geometric_expand(&Monomial::new(vec![2], vec![2]), &w, 1).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&[0], &[0]), q(1));
        assert_eq!(s.coeff(&[2], &[2]), q(1));
        assert_eq!(s.coeff(&[4], &[4]), q(1));
        assert!(!s.is_truncated(0));
    }

    #[test]
    fn pure_lambda_needs_a_range() {
        let m = Monomial::new(vec![0], vec![-1]);
        assert_eq!(
            geometric_expand(&m, &Window::new(4, 1), 1),
            Err(Error::WindowTooNarrow(0))
        );
        let w = Window::new(4, 1).with_lambda_range(0, -5, 0);
        let s = geometric_expand(&m, &w, 1).unwrap();
        assert_eq!(s.len(), 6);
        for k in 0..=5 {
            assert_eq!(s.coeff(&[-k], &[0]), q(1));
        }
        assert!(s.is_truncated(0));
    }

    #[test]
    fn constant_monomial_is_rejected() {
        let m = Monomial::new(vec![0], vec![0]);
        assert_eq!(
            geometric_expand(&m, &Window::new(4, 1), 1),
            Err(Error::DegenerateMonomial)
        );
    }

    #[test]
    fn z_degree_positive_monomial_flagged_when_lambda_overflows() {
        let w = Window::new(10, 1).with_lambda_range(0, -2, 2);
        let s = geometric_expand(&Monomial::new(vec![1], vec![1]), &w, 1).unwrap();
        assert!(s.is_truncated(0));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn product_truncates_z() {
        let w = Window::new(3, 0);
        let g = geometric_expand(&Monomial::new(vec![1], vec![]), &w, 1).unwrap();
        let p = g.mul(&g).unwrap().to_power_series().unwrap();
        assert_eq!(p.coeffs(), &[q(1), q(2), q(3), q(4)]);
    }

    #[test]
    fn term_budget() {
        let w = Window::new(50, 0).with_term_budget(10);
        let m = Monomial::new(vec![1, 0], vec![]);
        assert_eq!(geometric_expand(&m, &w, 2), Err(Error::WindowOverflow(10)));
    }

    #[test]
    fn invert_and_collapse() {
        let w = Window::new(2, 1).with_lambda_range(0, -1, 3);
        let s = MultiLaurent::from_monomials(
            w,
            1,
            &[Monomial::new(vec![1], vec![2]), Monomial::new(vec![1], vec![-1])],
        );
        let inv = s.invert_lambda(0);
        assert_eq!(inv.coeff(&[-2], &[1]), q(1));
        assert_eq!(inv.window().lambda_range(0), Some((-3, 1)));
        let one = s.set_lambda_one(0);
        assert_eq!(one.coeff(&[0], &[1]), q(2));
    }
}
