//! Closed-form generating functions for the `A` and even-`D` families.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::cyclo::{cyclo_series_product, CycloElement};
use super::{PowerSeries, Ring};
use crate::{Error, Result};

/// `(1/N) Σ_{i=0}^{N-1} Π_{k=0}^{N-1} 1/(1 - w^{ik} z)` to order `t`.
///
/// The sum is formed in `ℚ[x]/(x^N - 1)` and evaluated at a primitive root;
/// every coefficient must come out a nonnegative integer, otherwise an
/// [`Error::Internal`] is returned.
pub fn phi_su_series(n: u32, t: usize) -> Result<PowerSeries> {
    assert!(n >= 1, "su(N) needs N ≥ 1");
    let zero = CycloElement::root_power(n, 0).zero_like();
    let total = (0..n).fold(PowerSeries::constant(zero, t), |acc, i| {
        acc.add(&cyclo_series_product(n, i, t))
    });
    let nn = BigInt::from(n);
    let coeffs = total
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let v = c.rational_value().ok_or_else(|| {
                Error::Internal(format!("su({n}): roots of unity survive at z^{k}"))
            })?;
            let v = v / num_rational::BigRational::from_integer(nn.clone());
            if !v.is_integer() || v.is_negative() {
                return Err(Error::Internal(format!("su({n}): coefficient of z^{k} is {v}")));
            }
            Ok(v.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PowerSeries::from_coeffs(coeffs))
}

/// The dicyclic generating function for `so(2(N+2))`, `N` even:
///
/// `¼ [ 1/((1-z)^4 (1-z²)^{N-1}) + 2/((1-z²)^2 (1-z²)^{N/2} (1+z²)^{N/2-1}) + 1/((1-z²)^2 (1-z²)^{N-1}) ]`
pub fn phi_dic_even_series(n: u32, t: usize) -> Result<PowerSeries> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddDicyclic(n));
    }
    let one = BigInt::one();
    let inv_1mz = PowerSeries::geometric(&one, 1, t);
    let inv_1mz2 = PowerSeries::geometric(&one, 2, t);
    let inv_1pz2 = PowerSeries::geometric(&-BigInt::one(), 2, t);
    let half = n / 2;

    let first = inv_1mz.pow(4).mul(&inv_1mz2.pow(n - 1));
    let middle = inv_1mz2
        .pow(2 + half)
        .mul(&inv_1pz2.pow(half - 1))
        .scale(&BigInt::from(2));
    let last = inv_1mz2.pow(2 + n - 1);

    let series = first.add(&middle).add(&last).div_exact(&BigInt::from(4))?;
    if let Some(k) = series.coeffs().iter().position(Signed::is_negative) {
        return Err(Error::Internal(format!("Dic_{n}: negative coefficient at z^{k}")));
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_is_partition_series() {
        assert_eq!(phi_su_series(2, 8).unwrap(), PowerSeries::from_i64(&[1, 1, 2, 2, 3, 3, 4, 4, 5]));
    }

    #[test]
    fn su3_low_coefficients() {
        let s = phi_su_series(3, 2).unwrap();
        assert_eq!(s, PowerSeries::from_i64(&[1, 1, 2]));
    }

    #[test]
    fn su1_counts_only_the_trivial_rep() {
        assert_eq!(phi_su_series(1, 4).unwrap(), PowerSeries::from_i64(&[1; 5]));
    }

    #[test]
    fn su4_frozen() {
        // Independent sympy expansion of the same average.
        assert_eq!(
            phi_su_series(4, 10).unwrap(),
            PowerSeries::from_i64(&[1, 1, 3, 5, 10, 14, 22, 30, 43, 55, 73])
        );
    }

    #[test]
    fn dic2_starts_1_1_5() {
        let s = phi_dic_even_series(2, 2).unwrap();
        assert_eq!(s, PowerSeries::from_i64(&[1, 1, 5]));
        assert_eq!(phi_dic_even_series(2, 0).unwrap(), PowerSeries::from_i64(&[1]));
    }

    #[test]
    fn dic_rejects_odd() {
        assert_eq!(phi_dic_even_series(3, 4), Err(Error::OddDicyclic(3)));
        assert_eq!(phi_dic_even_series(0, 4), Err(Error::OddDicyclic(0)));
    }

    #[test]
    fn level_rank_symmetry() {
        let table: Vec<PowerSeries> = (1..=8).map(|n| phi_su_series(n, 8).unwrap()).collect();
        for k in 1..=8usize {
            for q in 1..=8usize {
                assert_eq!(table[k - 1].coeffs()[q], table[q - 1].coeffs()[k], "k={k} q={q}");
            }
        }
    }
}
