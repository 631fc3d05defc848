//! The representation side of the duality.
//!
//! Each simply-laced algebra is paired by the McKay correspondence with a
//! finite subgroup `Γ ⊂ SU(2)`: `ℤ_N` for `A_{N-1}`, the dicyclic group
//! `Dic_N` for `D_{N+2}`, and the binary polyhedral groups for `E6, E7, E8`.
//! The irreps of `Γ` sit on the nodes of the affine Dynkin diagram, with
//! dimension equal to the mark. A `q`-dimensional representation is a
//! multiplicity vector `m` with `Σ m_i dim_i = q`; it has unit determinant when
//! `Σ m_i det_i = 0` in the abelian group of one-dimensional characters.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::lie::{highest_root_marks, inverse_cartan, AlgebraId, Family};
use crate::matrix::frac;
use crate::series::{phi_dic_even_series, phi_su_series, PowerSeries};
use crate::{Error, Result};

/// `ℤ_{m_1} × ... × ℤ_{m_k}`; the empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DetGroup {
    moduli: Vec<u32>,
}

impl DetGroup {
    /// The group with the given cyclic factors. Factors equal to 1 are dropped.
    pub fn new(moduli: Vec<u32>) -> Self {
        assert!(moduli.iter().all(|&m| m >= 1), "moduli must be positive");
        Self {
            moduli: moduli.into_iter().filter(|&m| m > 1).collect(),
        }
    }

    /// `ℤ_m`.
    pub fn cyclic(m: u32) -> Self {
        Self::new(vec![m])
    }

    /// The cyclic factors.
    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    /// The identity.
    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.moduli.len()]
    }

    /// Reduces an arbitrary integer vector into the group.
    pub fn element(&self, v: &[i64]) -> Vec<u32> {
        assert_eq!(v.len(), self.moduli.len(), "arity mismatch");
        v.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| x.rem_euclid(m as i64) as u32)
            .collect()
    }

    /// Component-wise sum.
    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter().zip(b).zip(&self.moduli).map(|((x, y), m)| (x + y) % m).collect()
    }

    /// Mixed-radix position of an element in `0..order()`.
    pub fn index(&self, a: &[u32]) -> usize {
        a.iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&x, &m)| acc * m as usize + x as usize)
    }
}

/// An irreducible representation, reduced to what the count needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irrep {
    /// Dimension.
    pub dim: u32,
    /// Determinant, as an element of the group's [`DetGroup`].
    pub det: Vec<u32>,
}

/// The McKay-dual group of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    /// The algebra.
    pub algebra: AlgebraId,
    /// `|Γ|`.
    pub order: u64,
    /// Where determinants live.
    pub det_group: DetGroup,
    /// Trivial irrep first, then one per Dynkin node in node order.
    pub irreps: Vec<Irrep>,
}

impl GroupData {
    /// `Σ dim²`, which equals `|Γ|`.
    pub fn sum_of_squares(&self) -> u64 {
        self.irreps.iter().map(|r| (r.dim as u64).pow(2)).sum()
    }
}

/// `frac(x) ≡ 0`.
fn is_zero_mod1(x: &BigRational) -> bool {
    x.is_integer()
}

/// `a ∨ b` on rationals mod 1.
///
/// `a + b` if either is 0; otherwise `a` if `b ≡ k·a` for an integer `k`;
/// otherwise `b` if `a ≡ k·b`; otherwise undefined.
pub fn vee(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    let (a, b) = (frac(a), frac(b));
    if a.is_zero() || b.is_zero() {
        return Ok(frac(&(&a + &b)));
    }
    let multiple_of = |x: &BigRational, y: &BigRational| {
        // Multiples of y mod 1 repeat with period denom(y).
        let period = y.denom().to_u64().expect("small denominator");
        (1..=period).any(|k| is_zero_mod1(&(x - y * BigRational::from_integer(BigInt::from(k)))))
    };
    if multiple_of(&b, &a) {
        Ok(a)
    } else if multiple_of(&a, &b) {
        Ok(b)
    } else {
        Err(Error::VeeUndefined(Box::new((a, b))))
    }
}

/// `exp(2πi·p)` for a rational `p ∈ [0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootOfUnity(BigRational);

impl RootOfUnity {
    /// `exp(2πi·p)`, with `p` reduced mod 1.
    pub fn new(p: &BigRational) -> Self {
        Self(frac(p))
    }

    /// The exponent `p ∈ [0, 1)`.
    pub fn exponent(&self) -> &BigRational {
        &self.0
    }

    /// Multiplicative order.
    pub fn order(&self) -> u32 {
        self.0.denom().to_u32().expect("small order")
    }

    /// True for 1.
    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = (self.0.numer(), self.0.denom());
        if p.is_zero() {
            f.write_str("1")
        } else if q == &BigInt::from(2) {
            f.write_str("-1")
        } else if p.is_one() {
            write!(f, "exp(2πi/{q})")
        } else {
            write!(f, "exp(2πi·{p}/{q})")
        }
    }
}

fn mod1_rows(a: AlgebraId) -> Vec<Vec<BigRational>> {
    inverse_cartan(a).mod1().row_iter().map(<[_]>::to_vec).collect()
}

fn span(gens: &[Vec<BigRational>]) -> BTreeSet<Vec<BigRational>> {
    let Some(first) = gens.first() else {
        return BTreeSet::new();
    };
    let zero = vec![BigRational::zero(); first.len()];
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut frontier = vec![zero];
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w: Vec<_> = v.iter().zip(g).map(|(x, y)| frac(&(x + y))).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

/// A generating set for the rows of `C⁻¹ mod 1`.
///
/// Rows are scanned from the last node backwards; a row is kept only when it
/// is not already in the subgroup generated by those kept before it. Each kept
/// row `r` stands for the condition `Σ_j r_j y_j ∈ ℤ`.
pub fn congruence_constraints(a: AlgebraId) -> Vec<Vec<BigRational>> {
    let mut kept: Vec<Vec<BigRational>> = Vec::new();
    for row in mod1_rows(a).into_iter().rev() {
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        if !span(&kept).contains(&row) {
            kept.push(row);
        }
    }
    kept
}

/// Column-wise `R_1 ∨ R_2 ∨ ... ∨ R_k` over the given rows.
pub fn vee_fold(rows: &[Vec<BigRational>]) -> Result<Vec<BigRational>> {
    let width = rows.first().map_or(0, Vec::len);
    (0..width)
        .map(|j| rows.iter().try_fold(BigRational::zero(), |acc, row| vee(&acc, &row[j])))
        .collect()
}

/// `D = exp(2πi X)` with `X` the [`vee_fold`] of the rows of `C⁻¹ mod 1`.
pub fn determinant_prediction(a: AlgebraId) -> Result<Vec<RootOfUnity>> {
    Ok(vee_fold(&mod1_rows(a))?.iter().map(RootOfUnity::new).collect())
}

fn cyclic_from_fractions(fracs: &[BigRational]) -> (DetGroup, Vec<Vec<u32>>) {
    let m = fracs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let group = DetGroup::cyclic(m.to_u32().expect("small modulus"));
    let scale = BigRational::from_integer(m);
    let dets = fracs
        .iter()
        .map(|x| {
            let k = (x * &scale).to_integer().to_i64().expect("small");
            group.element(&vec![k; group.moduli().len()])
        })
        .collect();
    (group, dets)
}

/// The McKay-dual group with dimension and determinant of every irrep.
pub fn group_of(a: AlgebraId) -> GroupData {
    let r = a.dim();
    let marks = highest_root_marks(a);
    let (order, det_group, dets): (u64, DetGroup, Vec<Vec<u32>>) = match a.family() {
        Family::A => {
            let n = a.rank() + 1;
            let g = DetGroup::cyclic(n);
            let dets = (1..=r as i64).map(|k| g.element(&[k])).collect();
            (n as u64, g, dets)
        }
        Family::D => {
            let n = a.rank() - 2;
            let nu = n as usize;
            if n.is_multiple_of(2) {
                let g = DetGroup::new(vec![2, 2]);
                // Node j (1-based): a_j on the odd path nodes and node N+2,
                // b_j on the odd path nodes and node N+1.
                let dets = (1..=r)
                    .map(|j| {
                        let odd_path = j <= nu && j % 2 == 1;
                        let aj = odd_path || j == nu + 2;
                        let bj = odd_path || j == nu + 1;
                        vec![aj as u32, bj as u32]
                    })
                    .collect();
                (4 * n as u64, g, dets)
            } else {
                let rows = congruence_constraints(a);
                assert_eq!(rows.len(), 1, "D with odd N has a cyclic centre");
                let (g, dets) = cyclic_from_fractions(&rows[0]);
                (4 * n as u64, g, dets)
            }
        }
        Family::E => {
            let x: Vec<BigRational> = determinant_prediction(a)
                .expect("∨ is defined on the E-series")
                .into_iter()
                .map(|d| d.0)
                .collect();
            let (g, dets) = cyclic_from_fractions(&x);
            let order = match a.rank() {
                6 => 24,
                7 => 48,
                _ => 120,
            };
            (order, g, dets)
        }
    };
    let mut irreps = vec![Irrep {
        dim: 1,
        det: det_group.zero(),
    }];
    irreps.extend(marks.entries().iter().zip(dets).map(|(&dim, det)| Irrep { dim, det }));
    GroupData {
        algebra: a,
        order,
        det_group,
        irreps,
    }
}

/// Unit-determinant `q`-dimensional representations for every `q ≤ max_q`.
pub fn rep_counts_upto(g: &GroupData, max_q: usize) -> Vec<BigUint> {
    let size = g.det_group.order();
    let mut table = vec![vec![BigUint::zero(); size]; max_q + 1];
    table[0][0] = BigUint::one();
    let elements: Vec<Vec<u32>> = {
        let mut all = vec![g.det_group.zero()];
        for (pos, &m) in g.det_group.moduli().iter().enumerate() {
            all = all
                .into_iter()
                .flat_map(|e| {
                    (0..m).map(move |k| {
                        let mut e = e.clone();
                        e[pos] = k;
                        e
                    })
                })
                .collect();
        }
        all
    };
    for irrep in &g.irreps {
        let d = irrep.dim as usize;
        let shift: Vec<usize> = elements
            .iter()
            .map(|e| g.det_group.index(&g.det_group.add(e, &irrep.det)))
            .collect();
        for s in d..=max_q {
            for (e, &target) in elements.iter().zip(&shift) {
                let from = table[s - d][g.det_group.index(e)].clone();
                if !from.is_zero() {
                    table[s][target] += from;
                }
            }
        }
    }
    table.into_iter().map(|row| row[0].clone()).collect()
}

/// Unit-determinant `q`-dimensional representations of `g`.
pub fn rep_count(g: &GroupData, q: usize) -> BigUint {
    rep_counts_upto(g, q).pop().expect("nonempty")
}

/// `Φ_g(z) = 1 + Σ b_q z^q` to order `t`, cross-checked against the closed
/// forms where they exist.
pub fn rep_series(a: AlgebraId, t: usize) -> Result<PowerSeries> {
    if t == 0 {
        return Err(Error::ZeroTruncation);
    }
    let series = PowerSeries::from_coeffs(
        rep_counts_upto(&group_of(a), t).into_iter().map(BigInt::from).collect(),
    );
    let closed = match (a.family(), a.dicyclic_n()) {
        (Family::A, _) => Some(phi_su_series(a.rank() + 1, t)?),
        (Family::D, Some(n)) if n % 2 == 0 => Some(phi_dic_even_series(n, t)?),
        _ => None,
    };
    if let Some(closed) = closed {
        if closed != series {
            return Err(Error::Internal(mismatch(a, &series, &closed)));
        }
    }
    Ok(series)
}

fn mismatch(a: AlgebraId, counted: &PowerSeries, closed: &PowerSeries) -> String {
    let k = counted
        .coeffs()
        .iter()
        .zip(closed.coeffs())
        .position(|(x, y)| x != y)
        .unwrap_or(0);
    format!(
        "{a}: representation count {} differs from closed form {} at z^{k}",
        counted.coeffs()[k],
        closed.coeffs()[k]
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{count_weight_states_with, ehrhart_series_bruteforce, root_state_counts};
    use alloc::string::ToString;

    fn alg(s: &str) -> AlgebraId {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn vee_examples() {
        assert_eq!(vee(&q(2, 3), &q(1, 3)).unwrap(), q(2, 3));
        assert_eq!(vee(&q(5, 7), &q(6, 7)).unwrap(), q(5, 7));
        assert_eq!(vee(&q(1, 4), &q(0, 1)).unwrap(), q(1, 4));
        assert_eq!(vee(&q(1, 2), &q(1, 2)).unwrap(), q(1, 2));
        assert_eq!(vee(&q(0, 1), &q(0, 1)).unwrap(), q(0, 1));
    }

    #[test]
    fn vee_priority() {
        // 1/2 is 2·(1/4) but 1/4 is no multiple of 1/2.
        assert_eq!(vee(&q(1, 2), &q(1, 4)).unwrap(), q(1, 4));
        assert_eq!(vee(&q(1, 4), &q(1, 2)).unwrap(), q(1, 4));
    }

    #[test]
    fn vee_undefined() {
        assert_eq!(vee(&q(1, 2), &q(1, 3)), Err(Error::VeeUndefined(Box::new((q(1, 2), q(1, 3))))));
        assert!(vee(&q(2, 5), &q(1, 3)).is_err());
    }

    #[test]
    fn det_group_arithmetic() {
        let g = DetGroup::new(vec![2, 2]);
        assert_eq!(g.order(), 4);
        assert_eq!(g.add(&[1, 0], &[1, 1]), vec![0, 1]);
        assert_eq!(g.index(&[1, 1]), 3);
        assert_eq!(DetGroup::new(vec![1]).order(), 1);
        assert_eq!(DetGroup::cyclic(5).element(&[-1]), vec![4]);
    }

    #[test]
    fn group_orders() {
        for a in ["A1", "A2", "A5", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8"] {
            let g = group_of(alg(a));
            assert_eq!(g.sum_of_squares(), g.order, "{a}");
            let mut dims: Vec<u32> = g.irreps[1..].iter().map(|r| r.dim).collect();
            let mut marks = highest_root_marks(alg(a)).entries().to_vec();
            dims.sort_unstable();
            marks.sort_unstable();
            assert_eq!(dims, marks, "{a}");
        }
        assert_eq!(group_of(alg("E6")).order, 24);
        assert_eq!(group_of(alg("D6")).order, 16);
    }

    #[test]
    fn cyclic_group_data() {
        let g = group_of(alg("A3"));
        assert_eq!(g.det_group, DetGroup::cyclic(4));
        let dets: Vec<_> = g.irreps.iter().map(|r| r.det[0]).collect();
        assert_eq!(dets, vec![0, 1, 2, 3]);
        assert!(g.irreps.iter().all(|r| r.dim == 1));
    }

    #[test]
    fn dic2_group_data() {
        let g = group_of(alg("D4"));
        let ones: Vec<_> = g.irreps.iter().filter(|r| r.dim == 1).collect();
        assert_eq!(ones.len(), 4);
        assert_eq!(ones.iter().filter(|r| r.det == [0, 0]).count(), 1);
        let twos: Vec<_> = g.irreps.iter().filter(|r| r.dim == 2).collect();
        assert_eq!(twos.len(), 1);
        assert_eq!(twos[0].det, vec![0, 0]);
    }

    #[test]
    fn dic4_two_dimensional_dets_alternate() {
        let g = group_of(alg("D6"));
        let twos: Vec<_> = g.irreps.iter().filter(|r| r.dim == 2).map(|r| r.det.clone()).collect();
        assert_eq!(twos, vec![vec![0, 0], vec![1, 1], vec![0, 0]]);
    }

    #[test]
    fn dic_odd_uses_z4() {
        assert_eq!(group_of(alg("D5")).det_group, DetGroup::cyclic(4));
        assert_eq!(group_of(alg("D7")).det_group, DetGroup::cyclic(4));
    }

    #[test]
    fn e7_group_data() {
        let g = group_of(alg("E7"));
        let mut dims: Vec<_> = g.irreps.iter().map(|r| r.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 2, 2, 2, 3, 3, 4]);
        assert_eq!(g.irreps.iter().filter(|r| r.det == [1]).count(), 3);
    }

    #[test]
    fn small_counts() {
        assert_eq!(rep_count(&group_of(alg("A1")), 2), BigUint::from(2u32));
        assert_eq!(rep_count(&group_of(alg("D4")), 2), BigUint::from(5u32));
        for a in ["A1", "D5", "E8"] {
            assert_eq!(rep_count(&group_of(alg(a)), 0), BigUint::one());
        }
    }

    #[test]
    fn constraint_survivors() {
        assert_eq!(congruence_constraints(alg("A4")), vec![vec![q(1, 5), q(2, 5), q(3, 5), q(4, 5)]]);
        assert_eq!(congruence_constraints(alg("D5")).len(), 1);
        assert_eq!(congruence_constraints(alg("E6")).len(), 1);
        assert_eq!(congruence_constraints(alg("E7")).len(), 1);
        assert!(congruence_constraints(alg("E8")).is_empty());
    }

    #[test]
    fn even_d_constraints_are_the_two_half_sums() {
        for rank in [4u32, 6, 8, 10] {
            let a = AlgebraId::new(Family::D, rank).unwrap();
            let n = rank as usize - 2;
            let half = |extra: usize| -> Vec<BigRational> {
                (1..=rank as usize)
                    .map(|j| {
                        if (j <= n && j % 2 == 1) || j == extra {
                            q(1, 2)
                        } else {
                            q(0, 1)
                        }
                    })
                    .collect()
            };
            let rows: BTreeSet<_> = congruence_constraints(a).into_iter().collect();
            assert_eq!(rows, BTreeSet::from([half(n + 1), half(n + 2)]), "D{rank}");
        }
    }

    #[test]
    fn predictions() {
        let e7 = determinant_prediction(alg("E7")).unwrap();
        assert_eq!(e7.iter().filter(|d| d.to_string() == "-1").count(), 3);
        assert_eq!(e7.iter().filter(|d| d.is_one()).count(), 4);

        let e6 = determinant_prediction(alg("E6")).unwrap();
        let mut orders: Vec<_> = e6.iter().map(|d| d.exponent().clone()).collect();
        orders.sort();
        assert_eq!(orders, vec![q(0, 1), q(0, 1), q(1, 3), q(1, 3), q(2, 3), q(2, 3)]);

        assert!(determinant_prediction(alg("E8")).unwrap().iter().all(RootOfUnity::is_one));
    }

    fn thirds_and_halves(rows: &[[i64; 7]], den: i64, n: usize) -> Vec<Vec<BigRational>> {
        rows[..n].iter().map(|r| r[..n].iter().map(|&x| q(x, den)).collect()).collect()
    }

    fn e7_reference() -> Vec<Vec<BigRational>> {
        let z = [0; 7];
        let h = [0, 0, 0, 1, 0, 1, 1];
        thirds_and_halves(&[z, z, z, h, z, h, h], 2, 7)
    }

    fn e6_reference() -> Vec<Vec<BigRational>> {
        let a = [1, 2, 0, 1, 2, 0, 0];
        let b = [2, 1, 0, 2, 1, 0, 0];
        let z = [0; 7];
        thirds_and_halves(&[a, b, z, a, b, z], 3, 6)
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut p = p.clone();
                p.insert(pos, n - 1);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn reference_mod1_matrices_agree_up_to_relabelling() {
        for (a, shown) in [("E6", e6_reference()), ("E7", e7_reference())] {
            let ours = mod1_rows(alg(a));
            let n = ours.len();
            let found = permutations(n)
                .into_iter()
                .any(|p| (0..n).all(|i| (0..n).all(|j| shown[i][j] == ours[p[i]][p[j]])));
            assert!(found, "{a}");
        }
    }

    #[test]
    fn reference_vee_sums() {
        let e7: Vec<_> = [0, 0, 0, 1, 0, 1, 1].iter().map(|&x| q(x, 2)).collect();
        assert_eq!(vee_fold(&e7_reference()).unwrap(), e7);
        let e6: Vec<_> = [1, 2, 0, 1, 2, 0].iter().map(|&x| q(x, 3)).collect();
        assert_eq!(vee_fold(&e6_reference()).unwrap(), e6);
    }

    #[test]
    fn root_of_unity_display() {
        assert_eq!(RootOfUnity::new(&q(0, 1)).to_string(), "1");
        assert_eq!(RootOfUnity::new(&q(3, 2)).to_string(), "-1");
        assert_eq!(RootOfUnity::new(&q(1, 3)).to_string(), "exp(2πi/3)");
        assert_eq!(RootOfUnity::new(&q(2, 3)).to_string(), "exp(2πi·2/3)");
        assert_eq!(RootOfUnity::new(&q(2, 3)).order(), 3);
    }

    #[test]
    fn rep_series_matches_closed_forms() {
        assert_eq!(rep_series(alg("A1"), 6).unwrap(), PowerSeries::from_i64(&[1, 1, 2, 2, 3, 3, 4]));
        assert_eq!(rep_series(alg("D4"), 2).unwrap(), PowerSeries::from_i64(&[1, 1, 5]));
        for a in ["A2", "A4", "D6", "D8"] {
            rep_series(alg(a), 10).unwrap();
        }
    }

    #[test]
    fn duality_with_polytope() {
        for a in ["A3", "D5", "D7", "E6"] {
            assert_eq!(
                rep_series(alg(a), 8).unwrap(),
                ehrhart_series_bruteforce(alg(a), 8).unwrap(),
                "{a}"
            );
        }
    }

    #[test]
    fn reduced_constraints_match_full_integrality() {
        for a in ["A3", "A5", "D4", "D5", "D6", "E6", "E7"] {
            let counts = root_state_counts(alg(a), 8).unwrap();
            let rows = congruence_constraints(alg(a));
            for (level, count) in counts.iter().enumerate() {
                assert_eq!(
                    count_weight_states_with(alg(a), level as u64, &rows),
                    BigUint::from(*count),
                    "{a} q={level}"
                );
            }
        }
    }
}
