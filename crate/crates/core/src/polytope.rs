//! Lattice points of the dilated polytope `q·Q_g`, counted by exhaustive
//! exact enumeration.
//!
//! A root-lattice state is a dominant weight `y = Cx` with `x ∈ ℤ^r_{≥0}`,
//! `Cx ≥ 0` and `marks · Cx ≤ q`. Two enumerations are run and compared:
//!
//! - *root space*: depth-first search over `x` with exact per-coordinate
//!   bounds, rows of `Cx ≥ 0` checked as soon as they are fully determined;
//! - *weight space*: search over Dynkin labels `y` with `marks · y ≤ q`,
//!   keeping those with `C⁻¹ y` integral.
//!
//! Both produce a histogram by exact level `marks · y`, so a single search up
//! to level `T` yields every count `0..=T` at once.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::lie::{cartan_rows, highest_root_marks, AlgebraId, LieData};
use crate::matrix::ExactMatrix;
use crate::series::PowerSeries;
use crate::{Error, Result};

/// The slack form `A x' = b` of the constraints, with `x' = (x, k)`.
///
/// `A` is `(r+1) × (2r+1)`: rows `(C | -I_r | 0)` and `(marks·C | 0 | 1)`;
/// `b = (0, ..., 0, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    /// The matrix `A`.
    pub matrix: ExactMatrix,
    /// The right-hand side `b`.
    pub rhs: Vec<BigInt>,
}

impl ConstraintSystem {
    /// Integer entries of `A`.
    pub fn integer_rows(&self) -> Vec<Vec<i64>> {
        self.matrix.to_i64_rows().expect("constraint matrix is integral")
    }

    /// Checks `A x' = b` for a candidate in slack form.
    pub fn is_satisfied_by(&self, point: &LatticePoint) -> bool {
        if point.coords.len() != self.matrix.cols() {
            return false;
        }
        self.integer_rows().iter().zip(&self.rhs).all(|(row, b)| {
            let lhs: i64 = row.iter().zip(&point.coords).map(|(a, x)| a * (*x as i64)).sum();
            BigInt::from(lhs) == *b
        })
    }
}

/// A nonnegative integer vector: `x` (length `r`) or `x' = (x, k)` (length `2r+1`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    /// Coordinates.
    pub coords: Vec<u64>,
}

impl LatticePoint {
    /// Extends a reduced point `x` to slack form `(x, Cx, q - marks·Cx)`;
    /// `None` if `x` violates the inequalities.
    pub fn to_slack_form(&self, a: AlgebraId, q: u64) -> Option<LatticePoint> {
        let c = cartan_rows(a);
        let marks = highest_root_marks(a).as_i64();
        let x: Vec<i64> = self.coords.iter().map(|&v| v as i64).collect();
        let y: Vec<i64> = c.iter().map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum()).collect();
        let level: i64 = marks.iter().zip(&y).map(|(m, v)| m * v).sum();
        if y.iter().any(|&v| v < 0) || level > q as i64 {
            return None;
        }
        let mut coords = self.coords.clone();
        coords.extend(y.iter().map(|&v| v as u64));
        coords.push(q - level as u64);
        Some(LatticePoint { coords })
    }
}

/// Assembles `A` and `b` for level `q`.
pub fn build_constraints(a: AlgebraId, q: u64) -> ConstraintSystem {
    let r = a.dim();
    let c = cartan_rows(a);
    let marks = highest_root_marks(a).as_i64();
    let mut rows = vec![vec![0i64; 2 * r + 1]; r + 1];
    for i in 0..r {
        rows[i][..r].copy_from_slice(&c[i]);
        rows[i][r + i] = -1;
    }
    for j in 0..r {
        rows[r][j] = (0..r).map(|i| marks[i] * c[i][j]).sum();
    }
    rows[r][2 * r] = 1;
    let mut rhs = vec![BigInt::zero(); r + 1];
    rhs[r] = BigInt::from(q);
    ConstraintSystem {
        matrix: ExactMatrix::from_integers(&rows),
        rhs,
    }
}

/// Per-coordinate ratios `u_i = max_j C⁻¹_ij / c_j`, so every point of the
/// `q`-th dilate has `x_i ≤ q·u_i`.
pub fn root_space_ratios(data: &LieData) -> Vec<BigRational> {
    let r = data.rank();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| &data.inverse[(i, j)] / BigRational::from_integer(data.marks[j].into()))
                .max()
                .expect("rank ≥ 1")
        })
        .collect()
}

fn root_space_bounds(data: &LieData, max_level: u64) -> Vec<i64> {
    let q = BigRational::from_integer(max_level.into());
    root_space_ratios(data)
        .iter()
        .map(|u| (u * &q).floor().to_integer().to_i64().expect("bound fits"))
        .collect()
}

/// Visiting order for the root-space search: depth-first from a leaf of the
/// Dynkin tree, so each row closes soon after its node is assigned.
fn search_order(data: &LieData) -> Vec<usize> {
    let r = data.rank();
    let neighbours = |v: usize| (0..r).filter(move |&u| u != v && data.cartan[v][u] != 0);
    let start = (0..r).find(|&v| neighbours(v).count() <= 1).unwrap_or(0);
    let mut order = Vec::with_capacity(r);
    let mut seen = vec![false; r];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        let mut next: Vec<usize> = neighbours(v).filter(|&u| !seen[u]).collect();
        // Leaves first, so they are closed before the search moves on.
        next.sort_by_key(|&u| core::cmp::Reverse(neighbours(u).count()));
        stack.extend(next);
    }
    order
}

struct RootSearch<'a> {
    cartan: &'a [Vec<i64>],
    marks: &'a [i64],
    order: Vec<usize>,
    bounds: Vec<i64>,
    closing: Vec<Vec<usize>>,
    max_level: i64,
    x: Vec<i64>,
    hist: Vec<u64>,
}

impl RootSearch<'_> {
    fn run(&mut self, depth: usize, level: i64) {
        if depth == self.order.len() {
            self.hist[level as usize] += 1;
            return;
        }
        let v = self.order[depth];
        for value in 0..=self.bounds[v] {
            self.x[v] = value;
            let mut lev = level;
            let mut ok = true;
            for &row in &self.closing[depth] {
                let y: i64 = self.cartan[row].iter().zip(&self.x).map(|(c, x)| c * x).sum();
                lev += self.marks[row] * y;
                if y < 0 || lev > self.max_level {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.run(depth + 1, lev);
            }
        }
        self.x[v] = 0;
    }
}

/// Root-space histogram: `hist[l]` counts `x` whose state has level exactly `l ≤ max_level`.
pub fn root_space_histogram(data: &LieData, max_level: u64) -> Vec<u64> {
    let r = data.rank();
    let order = search_order(data);
    let position: Vec<usize> = {
        let mut p = vec![0; r];
        for (k, &v) in order.iter().enumerate() {
            p[v] = k;
        }
        p
    };
    // Row i is determined once its node and all neighbours are assigned.
    let mut closing = vec![Vec::new(); r];
    for i in 0..r {
        let last = (0..r)
            .filter(|&j| data.cartan[i][j] != 0)
            .map(|j| position[j])
            .max()
            .expect("diagonal is nonzero");
        closing[last].push(i);
    }
    let mut search = RootSearch {
        cartan: &data.cartan,
        marks: &data.marks,
        order,
        bounds: root_space_bounds(data, max_level),
        closing,
        max_level: max_level as i64,
        x: vec![0; r],
        hist: vec![0; max_level as usize + 1],
    };
    search.run(0, 0);
    search.hist
}

/// Linear congruences `Σ_j rows[k][j] · y_j ≡ 0 (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruences {
    rows: Vec<Vec<i64>>,
    modulus: i64,
}

impl Congruences {
    /// Full root-lattice membership: `det C · C⁻¹ y ≡ 0 (mod det C)`.
    pub fn full(data: &LieData) -> Self {
        Self {
            rows: data.adjugate.clone(),
            modulus: data.det,
        }
    }

    /// Integrality of `Σ_j row_j y_j` for each rational row.
    pub fn from_rational_rows(rows: &[Vec<BigRational>]) -> Self {
        let modulus = rows
            .iter()
            .flatten()
            .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let scale = BigRational::from_integer(modulus.clone());
        Self {
            rows: rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| (x * &scale).to_integer().to_i64().expect("small"))
                        .collect()
                })
                .collect(),
            modulus: modulus.to_i64().expect("small"),
        }
    }

    fn holds(&self, residues: &[i64]) -> bool {
        residues.iter().all(|&r| r.rem_euclid(self.modulus) == 0)
    }
}

/// Weight-space histogram under the given congruences.
pub fn weight_space_histogram(data: &LieData, congruences: &Congruences, max_level: u64) -> Vec<u64> {
    fn go(
        i: usize,
        level: i64,
        residues: &mut Vec<i64>,
        data: &LieData,
        cong: &Congruences,
        max: i64,
        hist: &mut [u64],
    ) {
        if i == data.rank() {
            if cong.holds(residues) {
                hist[level as usize] += 1;
            }
            return;
        }
        let c = data.marks[i];
        let mut y = 0;
        while level + c * y <= max {
            for (k, row) in cong.rows.iter().enumerate() {
                residues[k] += row[i] * y;
            }
            go(i + 1, level + c * y, residues, data, cong, max, hist);
            for (k, row) in cong.rows.iter().enumerate() {
                residues[k] -= row[i] * y;
            }
            y += 1;
        }
    }
    let mut hist = vec![0; max_level as usize + 1];
    let mut residues = vec![0; congruences.rows.len()];
    go(0, 0, &mut residues, data, congruences, max_level as i64, &mut hist);
    hist
}

fn cumulative(hist: &[u64]) -> Vec<u64> {
    hist.iter()
        .scan(0u64, |acc, &h| {
            *acc += h;
            Some(*acc)
        })
        .collect()
}

/// Counts `|Q_q|` for `q = 0..=max_level` by both enumerations, failing if
/// they disagree anywhere.
pub fn root_state_counts(a: AlgebraId, max_level: u64) -> Result<Vec<u64>> {
    let data = LieData::new(a);
    let by_roots = cumulative(&root_space_histogram(&data, max_level));
    let by_weights = cumulative(&weight_space_histogram(&data, &Congruences::full(&data), max_level));
    if by_roots != by_weights {
        let q = by_roots.iter().zip(&by_weights).position(|(x, y)| x != y).unwrap_or(0);
        return Err(Error::Internal(format!(
            "{a} level {q}: root-space count {} != weight-space count {}",
            by_roots[q], by_weights[q]
        )));
    }
    Ok(by_roots)
}

/// `|Q_q|`: root-lattice states at level `q`.
pub fn count_root_states(a: AlgebraId, q: u64) -> Result<BigUint> {
    Ok(BigUint::from(root_state_counts(a, q)?[q as usize]))
}

/// `1 + Σ_{t=1}^{T} |Q_t| z^t` by enumeration.
pub fn ehrhart_series_bruteforce(a: AlgebraId, t: usize) -> Result<PowerSeries> {
    if t == 0 {
        return Err(Error::ZeroTruncation);
    }
    let counts = root_state_counts(a, t as u64)?;
    let coeffs = counts.into_iter().map(BigInt::from).collect();
    Ok(PowerSeries::from_coeffs(coeffs))
}

/// Number of dominant weights with `marks · y ≤ q`, without the root-lattice
/// condition.
pub fn count_all_states(a: AlgebraId, q: u64) -> BigUint {
    fn go(marks: &[i64], budget: i64) -> u64 {
        match marks {
            [] => 1,
            [last] => (budget / last + 1) as u64,
            [first, rest @ ..] => (0..=budget / first).map(|y| go(rest, budget - first * y)).sum(),
        }
    }
    BigUint::from(go(&highest_root_marks(a).as_i64(), q as i64))
}

/// Weight-space count at level `q` under an explicit set of rational rows
/// (each `Σ_j row_j y_j` must be an integer).
pub fn count_weight_states_with(a: AlgebraId, q: u64, rows: &[Vec<BigRational>]) -> BigUint {
    let data = LieData::new(a);
    let hist = weight_space_histogram(&data, &Congruences::from_rational_rows(rows), q);
    BigUint::from(hist.iter().sum::<u64>())
}
