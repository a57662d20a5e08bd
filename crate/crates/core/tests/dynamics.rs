mod common;

use common::*;
use pseudoherm::catalog::complex_ghost;
use pseudoherm::dynamics::*;
use pseudoherm::mat::{c, r, CMat2, C64, I, ONE, ZERO};
use pseudoherm::metric::{metric_for_case, Normalization, PhaseVector};
use pseudoherm::{Branch, Case, CircleSign, Error};

/// Classical fourth-order Runge-Kutta for `psi' = -i H psi`.
fn rk4(h: &CMat2, psi0: StateVec2, t: f64, dt: f64) -> StateVec2 {
    let f = |p: StateVec2| {
        let v = h.apply(p);
        [-I * v[0], -I * v[1]]
    };
    let add = |p: StateVec2, k: StateVec2, s: f64| [p[0] + k[0] * s, p[1] + k[1] * s];
    let steps = (t / dt).round() as usize;
    let mut p = psi0;
    for _ in 0..steps {
        let k1 = f(p);
        let k2 = f(add(p, k1, dt / 2.0));
        let k3 = f(add(p, k2, dt / 2.0));
        let k4 = f(add(p, k3, dt));
        p = [
            p[0] + (k1[0] + k2[0] * 2.0 + k3[0] * 2.0 + k4[0]) * (dt / 6.0),
            p[1] + (k1[1] + k2[1] * 2.0 + k3[1] * 2.0 + k4[1]) * (dt / 6.0),
        ];
    }
    p
}

#[test]
fn matches_runge_kutta() {
    let mut g = rng(81);
    for case in [Case::Case1, Case::Case2, Case::Case3, Case::Case4] {
        for _ in 0..3 {
            let h = random_case_h(&mut g, case);
            let psi0 = [cunif(&mut g, 1.0), cunif(&mut g, 1.0)];
            let a = evolve(&h, psi0, 1.5, &tol()).unwrap();
            let b = rk4(&h, psi0, 1.5, 1e-4);
            let scale = a[0].norm().max(a[1].norm()).max(1.0);
            assert!((a[0] - b[0]).norm() + (a[1] - b[1]).norm() < 1e-6 * scale, "{case}");
        }
    }
}

#[test]
fn hermitian_evolution_is_unitary() {
    let mut g = rng(82);
    for _ in 0..50 {
        let a = CMat2::new(cunif(&mut g, 1.0), cunif(&mut g, 1.0), cunif(&mut g, 1.0), cunif(&mut g, 1.0));
        let h = a + a.dagger();
        let psi0 = [cunif(&mut g, 1.0), cunif(&mut g, 1.0)];
        let n0 = psi0[0].norm_sqr() + psi0[1].norm_sqr();
        let p = evolve(&h, psi0, 7.3, &tol()).unwrap();
        assert!((p[0].norm_sqr() + p[1].norm_sqr() - n0).abs() < 1e-12);
        let rep = stationarity_check(&h, &CMat2::identity(), &CMat2::identity(), psi0, &time_grid(0.0, 10.0, 100), &tol()).unwrap();
        assert!(rep.max_drift <= 1e-12);
    }
}

#[test]
fn ghost_case1_metric_is_conserved() {
    let h = complex_ghost(0.5, 0.3, c(1.0, 0.2)).hamiltonian;
    let eta = metric_for_case(&h, &Normalization::unit(), &PhaseVector::default(), Case::Case1, Branch::Plus, CircleSign::Plus, &tol())
        .unwrap()
        .eta;
    let times = time_grid(0.0, 10.0, 100);
    let psi0 = [ONE, c(0.3, -0.4)];
    let rep = stationarity_check(&h, &eta, &CMat2::identity(), psi0, &times, &tol()).unwrap();
    assert!(rep.max_drift <= 1e-9);
    assert_eq!(rep.values.len(), 100);
    let control = stationarity_check(&h, &CMat2::identity(), &CMat2::identity(), psi0, &times, &tol()).unwrap();
    assert!(control.max_drift > 1e-3);
}

#[test]
fn ghost_case2_indefinite_metric_is_conserved() {
    let h = complex_ghost(1.0, 2.0, r(1.0)).hamiltonian;
    let eta = metric_for_case(&h, &Normalization::unit(), &PhaseVector::real(0.0), Case::Case2, Branch::Plus, CircleSign::Plus, &tol())
        .unwrap()
        .eta;
    let times = time_grid(0.0, 10.0, 100);
    let psi0 = [ONE, ZERO];
    let rep = stationarity_check(&h, &eta, &CMat2::identity(), psi0, &times, &tol()).unwrap();
    let norms: Vec<f64> = times
        .iter()
        .map(|&t| {
            let p = evolve(&h, psi0, t, &tol()).unwrap();
            p[0].norm_sqr() + p[1].norm_sqr()
        })
        .collect();
    let grow = norms.iter().copied().fold(0.0, f64::max) / norms[0];
    assert!(grow > 10.0);
    assert!(rep.max_drift <= 1e-9 * grow);
}

#[test]
fn times_must_increase() {
    let h = CMat2::real(1.0, 0.0, 0.0, -1.0);
    let r = stationarity_check(&h, &CMat2::identity(), &CMat2::identity(), [ONE, ZERO], &[0.0, 1.0, 1.0], &tol());
    assert!(matches!(r, Err(Error::InvalidParameter { name: "times", .. })));
    assert!(time_grid(0.0, 1.0, 0).is_empty());
}

#[test]
fn propagator_composes() {
    let mut g = rng(83);
    let h = random_case_h(&mut g, Case::Case2);
    let a = propagator(&h, 0.7, &tol()).unwrap();
    let b = propagator(&h, 1.1, &tol()).unwrap();
    let ab = propagator(&h, 1.8, &tol()).unwrap();
    assert!((a * b - ab).max_abs() < 1e-12 * ab.max_abs().max(1.0));
    let z: C64 = propagator(&h, 0.0, &tol()).unwrap().trace();
    assert!((z - r(2.0)).norm() < 1e-13);
}
