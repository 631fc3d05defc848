//! Arithmetic in `ℚ[x]/(x^N - 1)`, with `x` standing for a primitive `N`-th
//! root of unity `w`.
//!
//! Products are cyclic convolutions. To read off the actual complex value at
//! `w`, an element is reduced modulo the cyclotomic polynomial `Φ_N`; an
//! element is a rational number exactly when that remainder is constant.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{PowerSeries, Ring};

/// `Σ_k a_k w^k` with `w^N = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloElement {
    coeffs: Vec<BigRational>,
}

impl CycloElement {
    /// Builds an element, folding exponents modulo `N = coeffs.len()`.
    pub fn from_coeffs(modulus: u32, coeffs: &[BigRational]) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        let n = modulus as usize;
        let mut folded = vec![BigRational::zero(); n];
        for (k, c) in coeffs.iter().enumerate() {
            folded[k % n] += c;
        }
        Self { coeffs: folded }
    }

    /// The scalar `c`.
    pub fn scalar(modulus: u32, c: BigRational) -> Self {
        Self::from_coeffs(modulus, &[c])
    }

    /// `w^k` for any integer `k`.
    pub fn root_power(modulus: u32, k: i64) -> Self {
        let n = modulus as usize;
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[k.rem_euclid(modulus as i64) as usize] = BigRational::one();
        Self { coeffs }
    }

    /// `N`.
    pub fn modulus(&self) -> u32 {
        self.coeffs.len() as u32
    }

    /// `a_0..a_{N-1}`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Remainder modulo `Φ_N`: the element as a member of `ℚ(w)`.
    pub fn reduce_primitive(&self) -> Vec<BigRational> {
        let phi = cyclotomic_polynomial(self.modulus());
        poly_rem(&self.coeffs, &phi)
    }

    /// The value at a primitive root if it is rational.
    pub fn rational_value(&self) -> Option<BigRational> {
        let rem = self.reduce_primitive();
        rem.iter().skip(1).all(Zero::is_zero).then(|| rem.into_iter().next().unwrap_or_default())
    }
}

impl Ring for CycloElement {
    fn zero_like(&self) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); self.coeffs.len()],
        }
    }

    fn one_like(&self) -> Self {
        Self::root_power(self.modulus(), 0)
    }

    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modulus(), other.modulus(), "modulus mismatch");
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.modulus(), other.modulus(), "modulus mismatch");
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[(i + j) % n] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Only monomials `c·w^k` are treated as units.
    fn unit_inverse(&self) -> Option<Self> {
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (k, c) = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        let mut inv = Self::root_power(self.modulus(), -(k as i64));
        inv.coeffs.iter_mut().for_each(|x| *x *= c.recip());
        Some(inv)
    }
}

/// Integer coefficients of `Φ_n`, lowest degree first.
///
/// Computed as `(x^n - 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|&d| n.is_multiple_of(d)) {
        num = poly_div_exact(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let (q, r) = rem[k + dd].div_rem(lead);
        assert!(r.is_zero(), "cyclotomic division is exact over ℤ");
        for (j, c) in den.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn poly_rem(num: &[BigRational], modulus: &[BigInt]) -> Vec<BigRational> {
    let dm = modulus.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dm {
        rem.resize(dm.max(1), BigRational::zero());
        return rem;
    }
    // Φ_n is monic.
    for k in (dm..rem.len()).rev() {
        let q = rem[k].clone();
        if q.is_zero() {
            continue;
        }
        for (j, c) in modulus.iter().enumerate() {
            rem[k - dm + j] -= &q * BigRational::from_integer(c.clone());
        }
    }
    rem.truncate(dm.max(1));
    rem
}

/// `Σ_{i=0}^{N-1} w^{m i}` as an element of `ℚ[x]/(x^N - 1)`.
pub fn root_power_sum(modulus: u32, m: i64) -> CycloElement {
    (0..modulus as i64)
        .map(|i| CycloElement::root_power(modulus, m * i))
        .fold(CycloElement::root_power(modulus, 0).zero_like(), |acc, x| acc.add(&x))
}

/// `Π_{k=0}^{N-1} 1/(1 - w^{i k} z)` expanded to order `t`.
pub fn cyclo_series_product(modulus: u32, i: u32, t: usize) -> PowerSeries<CycloElement> {
    assert!(i < modulus, "root index must lie in 0..N");
    let one = CycloElement::root_power(modulus, 0);
    (0..modulus as i64).fold(PowerSeries::constant(one, t), |acc, k| {
        let ratio = CycloElement::root_power(modulus, i as i64 * k);
        acc.mul(&PowerSeries::geometric(&ratio, 1, t))
    })
}
