use ehrhart_core::lie::{
    affine_cartan_matrix, cartan_matrix, det_cartan, highest_root_marks, inverse_cartan,
};
use ehrhart_core::matrix::ExactMatrix;
use ehrhart_core::mckay::{congruence_constraints, group_of, rep_counts_upto};
use ehrhart_core::omega::ehrhart_series_omega;
use ehrhart_core::polytope::{
    count_all_states, count_weight_states_with, ehrhart_series_bruteforce, root_state_counts,
};
use ehrhart_core::series::phi_su_series;
use ehrhart_core::{AlgebraId, Family};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn algebra(max_rank: u32) -> impl Strategy<Value = AlgebraId> {
    prop_oneof![
        (1..=max_rank).prop_map(|r| AlgebraId::new(Family::A, r).unwrap()),
        (4..=max_rank.max(4)).prop_map(|r| AlgebraId::new(Family::D, r).unwrap()),
        (6u32..=8).prop_map(|r| AlgebraId::new(Family::E, r).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cartan_is_symmetric_positive_and_inverted(a in algebra(12)) {
        let c = cartan_matrix(a);
        prop_assert!(c.is_symmetric());
        prop_assert!(c.determinant().is_positive());
        prop_assert_eq!(&inverse_cartan(a) * &c, ExactMatrix::identity(a.dim()));
    }

    #[test]
    fn affine_marks_span_the_kernel(a in algebra(12)) {
        let v: Vec<BigRational> = highest_root_marks(a)
            .affine()
            .into_iter()
            .map(|m| BigRational::from_integer(m.into()))
            .collect();
        prop_assert!(affine_cartan_matrix(a).mul_vec(&v).iter().all(Zero::is_zero));
    }

    #[test]
    fn enumerations_agree_and_grow(a in algebra(6), t in 1u64..=8) {
        let counts = root_state_counts(a, t).unwrap();
        prop_assert_eq!(counts[0], 1);
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        for (q, &c) in counts.iter().enumerate() {
            prop_assert!(BigUint::from(c) <= count_all_states(a, q as u64));
        }
    }

    #[test]
    fn polytope_equals_representations(a in algebra(6), t in 1usize..=8) {
        let brute = root_state_counts(a, t as u64).unwrap();
        let reps = rep_counts_upto(&group_of(a), t);
        let brute: Vec<BigUint> = brute.into_iter().map(BigUint::from).collect();
        prop_assert_eq!(brute, reps);
    }

    #[test]
    fn reduced_congruences_suffice(a in algebra(7), q in 0u64..=8) {
        let full = root_state_counts(a, q).unwrap()[q as usize];
        let reduced = count_weight_states_with(a, q, &congruence_constraints(a));
        prop_assert_eq!(reduced, BigUint::from(full));
    }

    #[test]
    fn group_orders_and_dims(a in algebra(12)) {
        let g = group_of(a);
        prop_assert_eq!(g.sum_of_squares(), g.order);
        let mut dims: Vec<u32> = g.irreps.iter().map(|r| r.dim).collect();
        let mut marks = highest_root_marks(a).affine();
        dims.sort_unstable();
        marks.sort_unstable();
        prop_assert_eq!(dims, marks);
    }

    #[test]
    fn omega_matches_bruteforce(rank in 1u32..=3, t in 1usize..=5) {
        let a = AlgebraId::new(Family::A, rank).unwrap();
        prop_assert_eq!(ehrhart_series_omega(a, t).unwrap(), ehrhart_series_bruteforce(a, t).unwrap());
    }
}

#[test]
fn determinants_by_family() {
    for n in 2..=12u32 {
        assert_eq!(det_cartan(AlgebraId::su(n).unwrap()), BigInt::from(n));
    }
    for r in 3..=12u32 {
        assert_eq!(det_cartan(AlgebraId::new(Family::D, r).unwrap()), BigInt::from(4));
    }
    for (r, d) in [(6u32, 3), (7, 2), (8, 1)] {
        assert_eq!(det_cartan(AlgebraId::new(Family::E, r).unwrap()), BigInt::from(d));
    }
}

#[test]
fn closed_form_level_rank() {
    let t = 10;
    let rows: Vec<Vec<BigInt>> = (1..=t as u32).map(|n| phi_su_series(n, t).unwrap().into_coeffs()).collect();
    for n in 1..=t {
        for q in 1..=t {
            assert_eq!(rows[n - 1][q], rows[q - 1][n], "N={n} q={q}");
        }
    }
}

#[test]
fn closed_form_matches_polytope() {
    for n in 2..=6u32 {
        let a = AlgebraId::su(n).unwrap();
        assert_eq!(phi_su_series(n, 10).unwrap(), ehrhart_series_bruteforce(a, 10).unwrap(), "su({n})");
    }
}
