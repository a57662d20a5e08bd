use pseudoherm::leewick::*;
use pseudoherm::mat::{c, r, CMat4, C64};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;

#[test]
fn diagonal_display() {
    let s = build_lee_wick(c(1.0, -0.5)).unwrap();
    assert_eq!(s.h, CMat4::diag([r(1.0), c(0.0, -0.5), c(0.0, 0.5), r(-1.0)]));
    assert_eq!(lee_wick_spectrum(s.omega), [r(1.0), c(0.0, -0.5), c(0.0, 0.5), r(-1.0)]);
    let res = verify_lee_wick(&s);
    assert!(res.max <= 1e-14);
}

#[test]
fn sector_matrices() {
    let s = build_lee_wick(c(2.0, 0.3)).unwrap();
    assert_eq!(s.d, s.bbar.dagger());
    assert_eq!(s.b, s.dbar.dagger());
    assert_eq!(s.eta * s.eta, CMat4::identity());
    assert_eq!(s.eta, s.eta.dagger());
    assert_eq!(s.eta.m[0][0], r(-1.0));
}

#[test]
fn real_frequency_is_hermitian() {
    let s = build_lee_wick(r(1.7)).unwrap();
    assert_eq!(s.h, s.h.dagger());
    assert_eq!(s.eta * s.h * s.eta, s.h);
}

#[test]
fn imaginary_frequency_is_traceless() {
    let s = build_lee_wick(c(0.0, 0.8)).unwrap();
    assert_eq!(s.h.trace(), r(0.0));
    // diag(0, i w, -i w, 0): H^+ = -H, so eta also intertwines with a sign flip
    assert_eq!(s.h.dagger(), -s.h);
    assert_eq!(s.h.dagger(), s.eta * s.h * s.eta);
}

#[test]
fn flipped_metric_is_detected() {
    let mut s = build_lee_wick(c(1.0, -0.5)).unwrap();
    s.eta.m[1][2] = r(-1.0);
    let res = verify_lee_wick(&s);
    assert!(res.pseudo_hermiticity > 0.5);
    assert!(res.metric > 0.5);
}

#[test]
fn random_frequencies() {
    let mut g = rand_chacha::ChaCha8Rng::seed_from_u64(101);
    for _ in 0..100 {
        let omega = C64::new(g.gen_range(-10.0..10.0), g.gen_range(-10.0..10.0));
        for v in [LeeWickVariant::Anticommuting, LeeWickVariant::Commuting] {
            let s = build_lee_wick_variant(omega, v).unwrap();
            assert!(verify_lee_wick(&s).max <= 1e-13);
        }
    }
}

#[test]
fn commuting_variant_uses_the_swap_metric() {
    let s = build_lee_wick_variant(c(1.0, 1.0), LeeWickVariant::Commuting).unwrap();
    assert_eq!(s.eta.m[0][0], r(1.0));
    assert_eq!(s.d.commutator(&s.dbar), CMat4::zero());
    assert_ne!(s.d.anticommutator(&s.dbar), CMat4::zero());
    // the anticommuting metric fails for the commuting operators
    let mut wrong = s;
    wrong.eta = build_lee_wick(c(1.0, 1.0)).unwrap().eta;
    assert!(verify_lee_wick(&wrong).exchange.iter().any(|&e| e > 0.5));
}

#[test]
fn system_serializes() {
    let s = build_lee_wick(c(1.0, -0.5)).unwrap();
    let js = serde_json::to_string(&s).unwrap();
    let back: LeeWickSystem = serde_json::from_str(&js).unwrap();
    assert_eq!(back, s);
    assert!(build_lee_wick(c(f64::INFINITY, 0.0)).is_err());
}
