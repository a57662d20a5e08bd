#![allow(dead_code)]

use std::f64::consts::PI;

use pseudoherm::mat::{c, CMat2, C64};
use pseudoherm::metric::{Normalization, PhaseVector};
use pseudoherm::{Branch, Case, CircleSign, Tolerances};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tol() -> Tolerances {
    Tolerances::default()
}

pub fn cunif<R: Rng>(rng: &mut R, scale: f64) -> C64 {
    c(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

/// Eigenvalue pair with the spectral symmetry of `case` and separation at least `gap`.
pub fn spectrum<R: Rng>(rng: &mut R, case: Case, gap: f64) -> (C64, C64) {
    loop {
        let (x, y) = (rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let pair = match case {
            Case::Case1 => (c(x, 0.0), c(y, 0.0)),
            Case::Case2 => (c(x, y), c(x, -y)),
            Case::Case3 => (c(0.0, x), c(0.0, y)),
            Case::Case4 => (c(x, y), c(-x, y)),
        };
        if (pair.0 - pair.1).norm() >= gap {
            return pair;
        }
    }
}

/// `S diag(E1, E2) S^-1` with a well-conditioned random `S`.
pub fn hamiltonian_with_spectrum<R: Rng>(rng: &mut R, e: (C64, C64)) -> CMat2 {
    let t = tol();
    loop {
        let s = CMat2::new(cunif(rng, 1.0), cunif(rng, 1.0), cunif(rng, 1.0), cunif(rng, 1.0));
        let cond = s.frobenius_norm().powi(2) / s.det().norm();
        if cond > 12.0 {
            continue;
        }
        let sinv = s.inverse(&t).unwrap();
        return s * CMat2::diag(e.0, e.1) * sinv;
    }
}

pub fn random_case_h<R: Rng>(rng: &mut R, case: Case) -> CMat2 {
    let e = spectrum(rng, case, 0.4);
    hamiltonian_with_spectrum(rng, e)
}

/// `|N_i|` log-uniform on `[0.1, 10]` with random phases.
pub fn random_normalization<R: Rng>(rng: &mut R) -> Normalization {
    let mut one = || C64::from_polar(10f64.powf(rng.gen_range(-1.0..1.0)), rng.gen_range(-PI..PI));
    let (a, b) = (one(), one());
    Normalization::new(a, b).unwrap()
}

pub fn unit_modulus_normalization<R: Rng>(rng: &mut R) -> Normalization {
    let a = C64::from_polar(1.0, rng.gen_range(-PI..PI));
    let b = C64::from_polar(1.0, rng.gen_range(-PI..PI));
    Normalization::new(a, b).unwrap()
}

pub fn random_phase<R: Rng>(rng: &mut R, im: f64) -> PhaseVector {
    PhaseVector::new(c(rng.gen_range(-PI..PI), im))
}

pub fn random_branch<R: Rng>(rng: &mut R) -> Branch {
    if rng.gen_bool(0.5) {
        Branch::Plus
    } else {
        Branch::Minus
    }
}

pub fn random_circle<R: Rng>(rng: &mut R) -> CircleSign {
    if rng.gen_bool(0.5) {
        CircleSign::Plus
    } else {
        CircleSign::Minus
    }
}

/// Plain cofactor inverse, independent of the library's tolerance handling.
pub fn inv2(m: &CMat2) -> CMat2 {
    let [[a, b], [c_, d]] = m.m;
    let det = a * d - b * c_;
    CMat2::new(d / det, -b / det, -c_ / det, a / det)
}

/// `|H^+ - sign eta H eta^-1|_F / |H|_F`
pub fn defining_residual(h: &CMat2, eta: &CMat2, sign: f64) -> f64 {
    (h.dagger() - (*eta * *h * inv2(eta)) * sign).frobenius_norm() / h.frobenius_norm()
}

pub fn rel(a: &CMat2, b: &CMat2) -> f64 {
    (*a - *b).frobenius_norm() / a.frobenius_norm().max(b.frobenius_norm()).max(1e-300)
}
