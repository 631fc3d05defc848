//! Exact truncated power series and the coefficient rings they run over.

pub mod closed_form;
pub mod cyclo;
pub mod laurent;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub use closed_form::{phi_dic_even_series, phi_su_series};
pub use cyclo::{cyclo_series_product, CycloElement};
pub use laurent::{geometric_expand, Monomial, MultiLaurent, Window};

/// Commutative ring operations needed by [`PowerSeries`].
///
/// `zero_like`/`one_like` take a prototype so rings whose elements carry a
/// runtime parameter (the modulus of a [`CycloElement`]) fit the same API.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    /// Additive identity of the same ring as `self`.
    fn zero_like(&self) -> Self;
    /// Multiplicative identity of the same ring as `self`.
    fn one_like(&self) -> Self;
    /// Is this the additive identity?
    fn is_zero_elem(&self) -> bool;
    /// Sum.
    fn add(&self, other: &Self) -> Self;
    /// Product.
    fn mul(&self, other: &Self) -> Self;
    /// Additive inverse.
    fn neg(&self) -> Self;
    /// Multiplicative inverse, if `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// `c_0 + c_1 z + ... + c_T z^T + O(z^{T+1})`.
///
/// Products and sums truncate to the smaller of the operands' orders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries<R = BigInt> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Series with the given coefficients; truncation is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a power series needs at least c_0");
        Self { coeffs }
    }

    /// The constant `c` to order `t`.
    pub fn constant(c: R, t: usize) -> Self {
        let mut coeffs = Vec::with_capacity(t + 1);
        coeffs.push(c.clone());
        coeffs.resize(t + 1, c.zero_like());
        Self { coeffs }
    }

    /// `1/(1 - ratio · z^degree)` to order `t`; `degree` must be positive.
    pub fn geometric(ratio: &R, degree: usize, t: usize) -> Self {
        assert!(degree >= 1, "1/(1 - c) has no z-dependence");
        let mut out = Self::constant(ratio.zero_like(), t);
        let mut power = ratio.one_like();
        let mut k = 0;
        while k <= t {
            out.coeffs[k] = power.clone();
            power = power.mul(ratio);
            k += degree;
        }
        out
    }

    /// Truncation order `T`.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// All coefficients `c_0..c_T`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Consumes the series.
    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `z^k`, or `None` past the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    /// Re-truncates to a lower order.
    pub fn truncate(&self, t: usize) -> Self {
        let t = t.min(self.truncation());
        Self {
            coeffs: self.coeffs[..=t].to_vec(),
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let t = self.truncation().min(other.truncation());
        Self {
            coeffs: (0..=t).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect(),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let t = self.truncation().min(other.truncation());
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = alloc::vec![zero; t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t + 1 - i) {
                if !b.is_zero_elem() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Self { coeffs }
    }

    /// `self^n`.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.coeffs[0].one_like(), self.truncation());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a series whose constant term is a unit of `R`.
    pub fn inverse(&self) -> Option<Self> {
        let inv0 = self.coeffs[0].unit_inverse()?;
        let t = self.truncation();
        let mut out: Vec<R> = Vec::with_capacity(t + 1);
        out.push(inv0.clone());
        for n in 1..=t {
            let mut acc = inv0.zero_like();
            for k in 1..=n {
                acc = acc.add(&self.coeffs[k].mul(&out[n - k]));
            }
            out.push(acc.mul(&inv0).neg());
        }
        Some(Self { coeffs: out })
    }
}

impl PowerSeries<BigInt> {
    /// Series from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Exact division of every coefficient by `d`; fails unless all divide.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        use num_integer::Integer;
        self.coeffs
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(d);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::Internal(alloc::format!("{c} is not divisible by {d}")))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }
}

impl PowerSeries<BigRational> {
    /// Converts to integer coefficients, failing on any non-integer.
    pub fn to_integer_series(&self) -> Result<PowerSeries<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::Internal(alloc::format!("coefficient of z^{k} is {c}, not an integer")))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(PowerSeries::from_coeffs)
    }
}

impl fmt::Display for PowerSeries<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.truncation() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(c: &[i64]) -> PowerSeries {
        PowerSeries::from_i64(c)
    }

    #[test]
    fn geometric_series() {
        let g = PowerSeries::geometric(&BigInt::one(), 1, 3);
        assert_eq!(g, series(&[1, 1, 1, 1]));
        let g2 = PowerSeries::geometric(&BigInt::from(-1), 2, 5);
        assert_eq!(g2, series(&[1, 0, -1, 0, 1, 0]));
    }

    #[test]
    fn partition_product() {
        let p = PowerSeries::geometric(&BigInt::one(), 1, 8)
            .mul(&PowerSeries::geometric(&BigInt::one(), 2, 8));
        assert_eq!(p, series(&[1, 1, 2, 2, 3, 3, 4, 4, 5]));
    }

    #[test]
    fn inverse_of_unit_series() {
        let f = series(&[1, -1, 0, 0]);
        assert_eq!(f.inverse().unwrap(), series(&[1, 1, 1, 1]));
        assert!(series(&[2, 1]).inverse().is_none());
        let r = PowerSeries::from_coeffs(alloc::vec![BigRational::new(2.into(), 1.into()); 3]);
        assert!(r.inverse().is_some());
    }

    #[test]
    fn truncation_is_min_of_operands() {
        let a = series(&[1, 1, 1, 1, 1]);
        let b = series(&[1, 2]);
        assert_eq!(a.mul(&b).truncation(), 1);
        assert_eq!(a.add(&b), series(&[2, 3]));
    }

    #[test]
    fn display() {
        assert_eq!(series(&[1, 1, 2, 0, -3]).to_string(), "1 + z + 2z^2 - 3z^4 + O(z^5)");
        assert_eq!(series(&[0, 0]).to_string(), "0 + O(z^2)");
    }

    #[test]
    fn div_exact_rejects_remainders() {
        assert_eq!(series(&[4, 8]).div_exact(&BigInt::from(4)).unwrap(), series(&[1, 2]));
        assert!(series(&[4, 7]).div_exact(&BigInt::from(4)).is_err());
    }

    fn small_series() -> impl Strategy<Value = PowerSeries> {
        prop::collection::vec(-20i64..20, 6).prop_map(|c| series(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(f in small_series(), g in small_series(), h in small_series()) {
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            let one = PowerSeries::constant(BigInt::one(), 5);
            prop_assert_eq!(f.mul(&one), f.clone());
        }

        #[test]
        fn inverse_roundtrip(mut c in prop::collection::vec(-20i64..20, 6), sign in prop::bool::ANY) {
            c[0] = if sign { 1 } else { -1 };
            let f = series(&c);
            let one = PowerSeries::constant(BigInt::one(), 5);
            prop_assert_eq!(f.mul(&f.inverse().unwrap()), one);
        }
    }
}
