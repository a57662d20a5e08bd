use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat::{is_finite, kron, CMat2, CMat4, C64};

/// Which raising matrix carries the second mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeeWickVariant {
    /// `-sigma3 (x) raise`: the two modes anticommute.
    #[default]
    Anticommuting,
    /// `1 (x) raise`: the two modes commute.
    Commuting,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LeeWickSystem {
    pub omega: C64,
    pub variant: LeeWickVariant,
    pub h: CMat4,
    pub dbar: CMat4,
    pub bbar: CMat4,
    pub d: CMat4,
    pub b: CMat4,
    pub eta: CMat4,
}

fn raise() -> CMat2 {
    CMat2::real(0.0, 1.0, 0.0, 0.0)
}

pub fn build_lee_wick(omega: C64) -> Result<LeeWickSystem> {
    build_lee_wick_variant(omega, LeeWickVariant::Anticommuting)
}

pub fn build_lee_wick_variant(omega: C64, variant: LeeWickVariant) -> Result<LeeWickSystem> {
    if !is_finite(omega) {
        return Err(Error::InvalidParameter {
            name: "omega",
            reason: "must be finite".into(),
        });
    }
    let dbar = kron(&raise(), &CMat2::identity());
    let (first, e11) = match variant {
        LeeWickVariant::Anticommuting => (CMat2::real(-1.0, 0.0, 0.0, 1.0), -1.0),
        LeeWickVariant::Commuting => (CMat2::identity(), 1.0),
    };
    let bbar = kron(&first, &raise());
    let d = bbar.dagger();
    let b = dbar.dagger();
    let h = (dbar * b - b * dbar) * (omega * 0.5) + (bbar * d - d * bbar) * (omega.conj() * 0.5);
    let eta = CMat4::from_real([
        [e11, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);
    Ok(LeeWickSystem {
        omega,
        variant,
        h,
        dbar,
        bbar,
        d,
        b,
        eta,
    })
}

/// `E_{m,n} = Omega (m - 1/2) + Omega* (n - 1/2)` at diagonal slot `2(1-m) + (1-n)`.
pub fn lee_wick_spectrum(omega: C64) -> [C64; 4] {
    let e = |m: f64, n: f64| omega * (m - 0.5) + omega.conj() * (n - 0.5);
    [e(1.0, 1.0), e(1.0, 0.0), e(0.0, 1.0), e(0.0, 0.0)]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LeeWickResiduals {
    /// `|H^+ - eta H eta|`
    pub pseudo_hermiticity: f64,
    /// `D^+ = eta Dbar eta^-1`, `B^+ = eta Bbar eta^-1`, `Dbar^+ = eta D eta^-1`, `Bbar^+ = eta B eta^-1`
    pub exchange: [f64; 4],
    /// `{D,Dbar} = {B,Bbar} = 0`, `{D,Bbar} = {B,Dbar} = 1`
    pub pseudo_anticommutators: f64,
    /// `{D,D^+} = {B,B^+} = 1`, `{D,B^+} = {B,D^+} = 0`
    pub standard_anticommutators: f64,
    /// squares and the remaining cross brackets among `D, B` and among `Dbar, Bbar`
    pub nilpotency: f64,
    /// `|eta^2 - 1|` plus `|eta - eta^+|`
    pub metric: f64,
    /// distance of `H` from `diag(E_{1,1}, E_{1,0}, E_{0,1}, E_{0,0})`
    pub spectrum: f64,
    pub max: f64,
}

/// All norms are Frobenius; nothing is normalized since every entry is O(|Omega|) or O(1).
/// Conjugations use `eta` for `eta^-1`, so a metric that breaks `eta^2 = 1`
/// shows up in the relations as well as in `metric`.
pub fn verify_lee_wick(sys: &LeeWickSystem) -> LeeWickResiduals {
    let one = CMat4::identity();
    let zero = CMat4::zero();
    let eta = sys.eta;
    // eta is its own inverse
    let conj = |a: &CMat4| eta * *a * eta;
    let dist = |a: CMat4, b: CMat4| (a - b).frobenius_norm();
    // brackets between operators of different modes
    let cross = |a: &CMat4, b: &CMat4| match sys.variant {
        LeeWickVariant::Anticommuting => a.anticommutator(b),
        LeeWickVariant::Commuting => a.commutator(b),
    };
    let (d, b, dbar, bbar) = (sys.d, sys.b, sys.dbar, sys.bbar);

    let pseudo_hermiticity = dist(sys.h.dagger(), conj(&sys.h));
    let exchange = [
        dist(d.dagger(), conj(&dbar)),
        dist(b.dagger(), conj(&bbar)),
        dist(dbar.dagger(), conj(&d)),
        dist(bbar.dagger(), conj(&b)),
    ];
    let pseudo_anticommutators = dist(cross(&d, &dbar), zero)
        + dist(d.anticommutator(&bbar), one)
        + dist(b.anticommutator(&dbar), one)
        + dist(cross(&b, &bbar), zero);
    let standard_anticommutators = dist(d.anticommutator(&d.dagger()), one)
        + dist(b.anticommutator(&b.dagger()), one)
        + dist(cross(&d, &b.dagger()), zero)
        + dist(cross(&b, &d.dagger()), zero);
    let nilpotency = [d, b, dbar, bbar]
        .iter()
        .map(|x| dist(*x * *x, zero))
        .sum::<f64>()
        + dist(cross(&d, &b), zero)
        + dist(cross(&dbar, &bbar), zero);
    let metric = dist(eta * eta, one) + dist(eta, eta.dagger());
    let spectrum = dist(sys.h, CMat4::diag(lee_wick_spectrum(sys.omega)));

    let max = exchange
        .iter()
        .copied()
        .chain([
            pseudo_hermiticity,
            pseudo_anticommutators,
            standard_anticommutators,
            nilpotency,
            metric,
            spectrum,
        ])
        .fold(0.0, f64::max);
    LeeWickResiduals {
        pseudo_hermiticity,
        exchange,
        pseudo_anticommutators,
        standard_anticommutators,
        nilpotency,
        metric,
        spectrum,
        max,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::c;

    #[test]
    fn diagonal_of_h() {
        let s = build_lee_wick(c(1.0, -0.5)).unwrap();
        assert!(s.h.is_diagonal());
        let want = [c(1.0, 0.0), c(0.0, -0.5), c(0.0, 0.5), c(-1.0, 0.0)];
        for k in 0..4 {
            assert_eq!(s.h.m[k][k], want[k]);
        }
    }

    #[test]
    fn both_variants_close() {
        for v in [LeeWickVariant::Anticommuting, LeeWickVariant::Commuting] {
            let s = build_lee_wick_variant(c(0.3, 2.0), v).unwrap();
            assert_eq!(verify_lee_wick(&s).max, 0.0);
        }
    }

    #[test]
    fn nonfinite_omega() {
        assert!(build_lee_wick(c(f64::NAN, 0.0)).is_err());
    }
}
