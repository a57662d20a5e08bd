mod common;

use common::{defining_residual, inv2, rel, tol};
use pseudoherm::classifier::classify;
use pseudoherm::diagonalizer::{eigenbasis, Branch, CircleSign};
use pseudoherm::mat::{c, CMat2, C64};
use pseudoherm::metric::{inverse_metric_nontrivial, inverse_metric_trivial, metric_for_case, Normalization, PhaseVector};
use pseudoherm::pauli::{pauli_compose, pauli_decompose};
use pseudoherm::leewick::{build_lee_wick_variant, verify_lee_wick, LeeWickVariant};
use pseudoherm::Case;
use proptest::prelude::*;

fn cplx() -> impl Strategy<Value = C64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(a, b)| c(a, b))
}

fn mat() -> impl Strategy<Value = CMat2> {
    (cplx(), cplx(), cplx(), cplx()).prop_map(|(a, b, c_, d)| CMat2::new(a, b, c_, d))
}

fn case() -> impl Strategy<Value = Case> {
    prop_oneof![Just(Case::Case1), Just(Case::Case2), Just(Case::Case3), Just(Case::Case4)]
}

fn pair(case: Case, x: f64, y: f64) -> (C64, C64) {
    match case {
        Case::Case1 => (c(x, 0.0), c(y, 0.0)),
        Case::Case2 => (c(x, y), c(x, -y)),
        Case::Case3 => (c(0.0, x), c(0.0, y)),
        Case::Case4 => (c(x, y), c(-x, y)),
    }
}

fn norm() -> impl Strategy<Value = Normalization> {
    (-1.0..1.0f64, -3.2..3.2f64, -1.0..1.0f64, -3.2..3.2f64).prop_map(|(m1, a1, m2, a2)| {
        Normalization::new(C64::from_polar(10f64.powf(m1), a1), C64::from_polar(10f64.powf(m2), a2)).unwrap()
    })
}

fn branch() -> impl Strategy<Value = Branch> {
    prop_oneof![Just(Branch::Plus), Just(Branch::Minus)]
}

fn circle() -> impl Strategy<Value = CircleSign> {
    prop_oneof![Just(CircleSign::Plus), Just(CircleSign::Minus)]
}

/// `S diag(E) S^-1` for well-conditioned `S` and separated eigenvalues.
fn hamiltonian() -> impl Strategy<Value = (Case, CMat2)> {
    (case(), -1.5..1.5f64, -1.5..1.5f64, mat()).prop_filter_map("conditioning", |(case, x, y, s)| {
        let e = pair(case, x, y);
        let cond = s.frobenius_norm().powi(2) / s.det().norm();
        if (e.0 - e.1).norm() < 0.3 || !(cond < 12.0) {
            return None;
        }
        Some((case, s * CMat2::diag(e.0, e.1) * inv2(&s)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pauli_round_trip(m in mat()) {
        prop_assert!((pauli_compose(&pauli_decompose(&m)) - m).max_abs() < 1e-14);
    }

    #[test]
    fn inverse_is_two_sided(m in mat()) {
        prop_assume!(m.det().norm() > 1e-3);
        let inv = m.inverse(&tol()).unwrap();
        prop_assert!((m * inv - CMat2::identity()).max_abs() < 1e-9 / m.det().norm());
    }

    #[test]
    fn constructed_hamiltonians_are_classified((case, h) in hamiltonian()) {
        prop_assert!(classify(&h, &tol()).unwrap().admits(case));
    }

    #[test]
    fn metric_intertwines((case, h) in hamiltonian(), n in norm(), phi in -3.2..3.2f64, b in branch(), ci in circle()) {
        let m = metric_for_case(&h, &n, &PhaseVector::real(phi), case, b, ci, &tol()).unwrap();
        prop_assert!(defining_residual(&h, &m.eta, case.kind().sign()) < 1e-9);
        prop_assert!(m.direct_product_residual < 1e-11);
        prop_assert!(m.det_sign_ok());
    }

    #[test]
    fn metric_is_hermitian_for_real_phase((case, h) in hamiltonian(), n in norm(), phi in -3.2..3.2f64) {
        let m = metric_for_case(&h, &n, &PhaseVector::real(phi), case, Branch::Plus, CircleSign::Plus, &tol()).unwrap();
        prop_assert!((m.eta - m.eta.dagger()).max_abs() < 1e-10 * m.eta.max_abs());
    }

    #[test]
    fn structural_inverse((case, h) in hamiltonian(), n in norm(), phi in -3.2..3.2f64, im in -0.5..0.5f64, b in branch(), ci in circle()) {
        let pv = PhaseVector::new(c(phi, im));
        let eta = metric_for_case(&h, &n, &pv, case, b, ci, &tol()).unwrap().eta;
        let inv = if case.trivial() {
            inverse_metric_trivial(&h, &n, case, b, ci, &tol())
        } else {
            inverse_metric_nontrivial(&h, &n, &pv, case, b, ci, &tol())
        }.unwrap();
        prop_assert!(rel(&inv, &inv2(&eta)) < 1e-10);
    }

    #[test]
    fn branch_swaps_eigenvalues((case, h) in hamiltonian()) {
        let p = eigenbasis(&h, case, Branch::Plus, &tol()).unwrap();
        let m = eigenbasis(&h, case, Branch::Minus, &tol()).unwrap();
        prop_assert_eq!((p.e1, p.e2), (m.e2, m.e1));
    }

    #[test]
    fn normalization_scales_quadratically((case, h) in hamiltonian(), s in 0.1..10.0f64) {
        let pv = PhaseVector::real(0.3);
        let a = metric_for_case(&h, &Normalization::unit(), &pv, case, Branch::Plus, CircleSign::Plus, &tol()).unwrap().eta;
        let n = Normalization::new(c(s, 0.0), c(s, 0.0)).unwrap();
        let b = metric_for_case(&h, &n, &pv, case, Branch::Plus, CircleSign::Plus, &tol()).unwrap().eta;
        prop_assert!(rel(&(a * (s * s)), &b) < 1e-12);
    }

    #[test]
    fn zero_normalization_rejected(z in cplx()) {
        prop_assert!(Normalization::new(C64::new(0.0, 0.0), z).is_err());
        prop_assert!(Normalization::new(z, C64::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn circle_sign_is_global((case, h) in hamiltonian(), n in norm(), phi in -3.2..3.2f64, b in branch()) {
        let pv = PhaseVector::real(phi);
        let p = metric_for_case(&h, &n, &pv, case, b, CircleSign::Plus, &tol()).unwrap().eta;
        let m = metric_for_case(&h, &n, &pv, case, b, CircleSign::Minus, &tol()).unwrap().eta;
        prop_assert!((p + m).max_abs() <= 1e-14 * p.max_abs());
    }

    #[test]
    fn lee_wick_closes(re in -5.0..5.0f64, im in -5.0..5.0f64, commuting in any::<bool>()) {
        let v = if commuting { LeeWickVariant::Commuting } else { LeeWickVariant::Anticommuting };
        let sys = build_lee_wick_variant(c(re, im), v).unwrap();
        prop_assert!(verify_lee_wick(&sys).max <= 1e-13 * (1.0 + c(re, im).norm()));
    }
}
