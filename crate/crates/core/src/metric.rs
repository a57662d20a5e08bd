use serde::{Deserialize, Serialize};

use crate::classifier::{check_case, classify, Case, Kind};
use crate::diagonalizer::{eigenbasis, Branch, CircleSign, EigenSystem};
use crate::error::{Error, Result};
use crate::mat::{is_finite, sigma1, sigma2, sigma3, CMat2, Vec3, C64, I, ZERO};
use crate::tol::Tolerances;

/// Diagonal renormalization `diag(N1, N2)` of the right eigenbasis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Normalization {
    n1: C64,
    n2: C64,
}

impl Normalization {
    pub fn new(n1: C64, n2: C64) -> Result<Self> {
        if !is_finite(n1) || !is_finite(n2) || n1.norm() == 0.0 || n2.norm() == 0.0 {
            return Err(Error::InvalidNormalization {
                n1: n1.norm(),
                n2: n2.norm(),
            });
        }
        Ok(Normalization { n1, n2 })
    }

    pub fn unit() -> Self {
        Normalization {
            n1: C64::new(1.0, 0.0),
            n2: C64::new(1.0, 0.0),
        }
    }

    pub fn n1(&self) -> C64 {
        self.n1
    }

    pub fn n2(&self) -> C64 {
        self.n2
    }

    pub fn matrix(&self) -> CMat2 {
        CMat2::diag(self.n1, self.n2)
    }

    /// `(|N1|^2 + |N2|^2) / 2`
    pub fn c0(&self) -> f64 {
        (self.n1.norm_sqr() + self.n2.norm_sqr()) / 2.0
    }

    /// `(|N1|^2 - |N2|^2) / 2`
    pub fn c3(&self) -> f64 {
        (self.n1.norm_sqr() - self.n2.norm_sqr()) / 2.0
    }

    /// `(N2* N1 + N1* N2) / 2`, the coefficient of `X^+ (e.sigma) X`.
    pub fn a(&self) -> f64 {
        (self.n2.conj() * self.n1).re
    }

    /// `(N1* N2 - N2* N1) / 2i`, the coefficient of `X^+ (e_perp.sigma) X`.
    pub fn b(&self) -> f64 {
        -(self.n2.conj() * self.n1).im
    }

    /// `|N1 N2|^2`
    pub fn abs_prod_sq(&self) -> f64 {
        (self.n1 * self.n2).norm_sqr()
    }
}

impl<'de> Deserialize<'de> for Normalization {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n1: C64,
            n2: C64,
        }
        let raw = Raw::deserialize(d)?;
        Normalization::new(raw.n1, raw.n2).map_err(serde::de::Error::custom)
    }
}

/// `e = (cos phi, sin phi, 0)`, `e_perp = (sin phi, -cos phi, 0)`; phi may be complex.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PhaseVector {
    pub phi: C64,
}

impl PhaseVector {
    pub fn new(phi: C64) -> Self {
        PhaseVector { phi }
    }

    pub fn real(phi: f64) -> Self {
        PhaseVector {
            phi: C64::new(phi, 0.0),
        }
    }

    pub fn e(&self) -> Vec3 {
        [self.phi.cos(), self.phi.sin(), ZERO]
    }

    pub fn e_perp(&self) -> Vec3 {
        [self.phi.sin(), -self.phi.cos(), ZERO]
    }

    /// `[[0, e^{-i phi}], [e^{i phi}, 0]]`
    pub fn e_sigma(&self) -> CMat2 {
        CMat2::new(ZERO, (-I * self.phi).exp(), (I * self.phi).exp(), ZERO)
    }

    /// `[[0, i e^{-i phi}], [-i e^{i phi}, 0]]`
    pub fn e_perp_sigma(&self) -> CMat2 {
        CMat2::new(ZERO, I * (-I * self.phi).exp(), -I * (I * self.phi).exp(), ZERO)
    }

    /// `P_perp = i sigma3 P`
    pub fn p_perp(&self) -> CMat2 {
        sigma3() * self.e_sigma() * I
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Q {
    Identity,
    Parity(PhaseVector),
}

impl Q {
    pub fn matrix(&self) -> CMat2 {
        match self {
            Q::Identity => CMat2::identity(),
            Q::Parity(pv) => pv.e_sigma(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MetricResult {
    pub eta: CMat2,
    /// `eta0` in the trivial phase, `eta1` otherwise.
    pub part_a: CMat2,
    /// `eta3` in the trivial phase, `eta2` otherwise.
    pub part_b: CMat2,
    pub q_used: Q,
    pub kind: Kind,
    pub case: Case,
    pub branch: Branch,
    pub circle: CircleSign,
    pub residual: f64,
    /// Relative deviation of `circle (NX)^+ Q (NX)` from `part_a + part_b`.
    pub direct_product_residual: f64,
    pub hermitian: bool,
}

impl MetricResult {
    /// `Re det eta` has the sign of `det Q` and `Im det eta` is negligible.
    pub fn det_sign_ok(&self) -> bool {
        let d = self.eta.det();
        let expected = if self.case.trivial() { 1.0 } else { -1.0 };
        d.re * expected > 0.0 && d.im.abs() <= 1e-10 * d.norm()
    }
}

/// `|H^+ -+ eta H eta^-1|_F / max(1, |H|_F)`
pub fn verify_pseudo_hermiticity(h: &CMat2, eta: &CMat2, kind: Kind, tol: &Tolerances) -> Result<f64> {
    let inv = eta.inverse(tol)?;
    let d = h.dagger() - (*eta * *h * inv) * kind.sign();
    Ok(d.frobenius_norm() / h.frobenius_norm().max(1.0))
}

fn finish(
    h: &CMat2,
    es: &EigenSystem,
    n: &Normalization,
    q: Q,
    parts: (CMat2, CMat2),
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<MetricResult> {
    let (part_a, part_b) = (parts.0 * circle.sign(), parts.1 * circle.sign());
    let eta = part_a + part_b;
    let nx = n.matrix() * es.x;
    let direct = nx.dagger() * q.matrix() * nx * circle.sign();
    let kind = es.case.kind();
    Ok(MetricResult {
        eta,
        part_a,
        part_b,
        q_used: q,
        kind,
        case: es.case,
        branch: es.branch,
        circle,
        residual: verify_pseudo_hermiticity(h, &eta, kind, tol)?,
        direct_product_residual: direct.rel_diff(&eta),
        hermitian: eta.approx_eq(&eta.dagger(), tol),
    })
}

fn require_trivial(case: Case, trivial: bool) -> Result<()> {
    if case.trivial() == trivial {
        Ok(())
    } else {
        Err(Error::CaseMismatch {
            requested: case.to_string(),
        })
    }
}

/// `eta0 = c0 X^+ X`, `eta3 = c3 X^+ sigma3 X` for Case 1 or 3.
pub fn metric_trivial(
    h: &CMat2,
    n: &Normalization,
    case: Case,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<MetricResult> {
    require_trivial(case, true)?;
    let es = eigenbasis(h, case, branch, tol)?;
    let f = &es.frame;
    let parts = (
        f.conj_sandwich(&CMat2::identity()) * n.c0(),
        f.conj_sandwich(&sigma3()) * n.c3(),
    );
    finish(h, &es, n, Q::Identity, parts, circle, tol)
}

/// `eta1 = a X^+ (e.sigma) X`, `eta2 = b X^+ (e_perp.sigma) X` for Case 2 or 4.
pub fn metric_nontrivial(
    h: &CMat2,
    n: &Normalization,
    pv: &PhaseVector,
    case: Case,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<MetricResult> {
    require_trivial(case, false)?;
    let es = eigenbasis(h, case, branch, tol)?;
    let f = &es.frame;
    let (cp, sp) = (pv.phi.cos(), pv.phi.sin());
    let xs1 = f.conj_sandwich(&sigma1());
    let xs2 = f.conj_sandwich(&sigma2());
    let parts = (
        (xs1 * cp + xs2 * sp) * n.a(),
        (xs1 * sp - xs2 * cp) * n.b(),
    );
    finish(h, &es, n, Q::Parity(*pv), parts, circle, tol)
}

/// `eta = circle (NX)^+ Q (NX)` for the case selected by `kind` and `q`.
pub fn metric_general(
    h: &CMat2,
    n: &Normalization,
    q: Q,
    kind: Kind,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<MetricResult> {
    let case = Case::from_kind_phase(kind, q == Q::Identity);
    check_case(h, case, tol)?;
    match q {
        Q::Identity => metric_trivial(h, n, case, branch, circle, tol),
        Q::Parity(pv) => metric_nontrivial(h, n, &pv, case, branch, circle, tol),
    }
}

/// The admitted case for `kind`, or the unique admitted case when `kind` is absent.
pub fn auto_case(h: &CMat2, kind: Option<Kind>, tol: &Tolerances) -> Result<Case> {
    let cl = classify(h, tol)?;
    if cl.exceptional {
        return Err(Error::ExceptionalPoint {
            disc_abs: cl.diagnostics.disc.norm(),
        });
    }
    match kind {
        Some(k) => cl.case_for(k).ok_or_else(|| Error::CaseMismatch {
            requested: format!("{k:?} kind").to_lowercase(),
        }),
        None => cl.unique_case(),
    }
}

/// Metric for an explicit case.
pub fn metric_for_case(
    h: &CMat2,
    n: &Normalization,
    pv: &PhaseVector,
    case: Case,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<MetricResult> {
    if case.trivial() {
        metric_trivial(h, n, case, branch, circle, tol)
    } else {
        metric_nontrivial(h, n, pv, case, branch, circle, tol)
    }
}

/// `eta^-1 = circle (c0 X^-1 X^+^-1 - c3 X^-1 sigma3 X^+^-1) / |N1 N2|^2`
pub fn inverse_metric_trivial(
    h: &CMat2,
    n: &Normalization,
    case: Case,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<CMat2> {
    require_trivial(case, true)?;
    let es = eigenbasis(h, case, branch, tol)?;
    let f = &es.frame;
    let m = f.inv_sandwich(&CMat2::identity()) * n.c0() - f.inv_sandwich(&sigma3()) * n.c3();
    Ok(m * (circle.sign() / n.abs_prod_sq()))
}

/// `eta^-1 = circle (alpha X^-1 sigma1 X^+^-1 + beta X^-1 sigma2 X^+^-1) / |N1 N2|^2`
/// with `alpha = a cos phi + b sin phi`, `beta = a sin phi - b cos phi`.
pub fn inverse_metric_nontrivial(
    h: &CMat2,
    n: &Normalization,
    pv: &PhaseVector,
    case: Case,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<CMat2> {
    require_trivial(case, false)?;
    let es = eigenbasis(h, case, branch, tol)?;
    let f = &es.frame;
    let (cp, sp) = (pv.phi.cos(), pv.phi.sin());
    let alpha = cp * n.a() + sp * n.b();
    let beta = sp * n.a() - cp * n.b();
    let m = f.inv_sandwich(&sigma1()) * alpha + f.inv_sandwich(&sigma2()) * beta;
    Ok(m * (circle.sign() / n.abs_prod_sq()))
}

/// Largest of `|X M X^+ - X^+ M X|` over `ms`, relative to `|X|^2`.
fn self_conjugacy_residual(es: &EigenSystem, ms: &[CMat2]) -> f64 {
    let scale = es.x.frobenius_norm().powi(2).max(1.0);
    ms.iter()
        .map(|m| (es.x * *m * es.xdag - es.xdag * *m * es.x).max_abs() / scale)
        .fold(0.0, f64::max)
}

fn require_self_conjugate(es: &EigenSystem, ms: &[CMat2], tol: &Tolerances) -> Result<()> {
    let residual = self_conjugacy_residual(es, ms);
    if residual > tol.threshold(1.0) {
        Err(Error::FrameNotSelfConjugate { residual })
    } else {
        Ok(())
    }
}

/// `eta^-1 = sigma3 (eta0 - eta3) sigma3 / |N1 N2|^2`.
///
/// Requires `X X^+ = X^+ X` and `X sigma3 X^+ = X^+ sigma3 X`.
pub fn inverse_metric_trivial_conjugate_form(
    h: &CMat2,
    n: &Normalization,
    case: Case,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<CMat2> {
    let mr = metric_trivial(h, n, case, branch, circle, tol)?;
    let es = eigenbasis(h, case, branch, tol)?;
    require_self_conjugate(&es, &[CMat2::identity(), sigma3()], tol)?;
    let s3 = sigma3();
    Ok(s3 * (mr.part_a - mr.part_b) * s3 * (1.0 / n.abs_prod_sq()))
}

/// `eta^-1 = -sigma3 (C (eta1^+ + eta2^+) + i S ((b/a) eta1^+ - (a/b) eta2^+)) sigma3 / |N1 N2|^2`
/// with `C = cosh(2 Im phi)`, `S = sinh(2 Im phi)`.
///
/// Requires `X sigma_k X^+ = X^+ sigma_k X` for k = 1, 2.
pub fn inverse_metric_nontrivial_conjugate_form(
    h: &CMat2,
    n: &Normalization,
    pv: &PhaseVector,
    case: Case,
    branch: Branch,
    circle: CircleSign,
    tol: &Tolerances,
) -> Result<CMat2> {
    let mr = metric_nontrivial(h, n, pv, case, branch, circle, tol)?;
    let es = eigenbasis(h, case, branch, tol)?;
    require_self_conjugate(&es, &[sigma1(), sigma2()], tol)?;
    let (e1d, e2d) = (mr.part_a.dagger(), mr.part_b.dagger());
    let im2 = 2.0 * pv.phi.im;
    let mut inner = (e1d + e2d) * im2.cosh();
    if im2 != 0.0 {
        let (a, b) = (n.a(), n.b());
        if a == 0.0 {
            return Err(Error::DegenerateNormalizationRatio { which: "N2* N1 + N1* N2" });
        }
        if b == 0.0 {
            return Err(Error::DegenerateNormalizationRatio { which: "N2* N1 - N1* N2" });
        }
        inner += (e1d * (b / a) - e2d * (a / b)) * (I * im2.sinh());
    }
    let s3 = sigma3();
    Ok(s3 * inner * s3 * (-1.0 / n.abs_prod_sq()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{c, r};

    fn ghost(m: f64, eps: f64, g: C64) -> CMat2 {
        CMat2::new(c(m, -eps), g.conj(), g, c(m, eps))
    }

    #[test]
    fn zero_normalization_rejected() {
        assert!(Normalization::new(ZERO, r(1.0)).is_err());
        assert!(Normalization::new(r(1.0), c(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn hermitian_unit_metric() {
        let tol = Tolerances::default();
        let h = ghost(1.0, 0.0, r(3.0));
        let mr = metric_trivial(&h, &Normalization::unit(), Case::Case1, Branch::Plus, CircleSign::Plus, &tol).unwrap();
        assert!(mr.eta.approx_eq(&CMat2::identity(), &tol), "{:?}", mr.eta);
        assert!(mr.residual < 1e-14);
    }

    #[test]
    fn equal_normalization_kills_eta2() {
        let tol = Tolerances::default();
        let h = ghost(1.0, 2.0, r(1.0));
        let n = Normalization::new(c(0.6, 0.8), c(0.6, 0.8)).unwrap();
        let mr = metric_nontrivial(&h, &n, &PhaseVector::real(0.0), Case::Case2, Branch::Plus, CircleSign::Plus, &tol).unwrap();
        assert_eq!(mr.part_b, CMat2::zero());
        assert!(mr.det_sign_ok());
    }

    #[test]
    fn wrong_phase_is_rejected() {
        let tol = Tolerances::default();
        let h = ghost(1.0, 2.0, r(1.0));
        let e = metric_trivial(&h, &Normalization::unit(), Case::Case2, Branch::Plus, CircleSign::Plus, &tol);
        assert!(matches!(e, Err(Error::CaseMismatch { .. })));
    }

    #[test]
    fn diagonal_scaling_inverse() {
        let tol = Tolerances::default();
        let h = CMat2::diag(r(1.0), r(-1.0));
        let n = Normalization::new(r(2.0), r(1.0)).unwrap();
        let mr = metric_trivial(&h, &n, Case::Case1, Branch::Plus, CircleSign::Plus, &tol).unwrap();
        assert!(mr.eta.approx_eq(&CMat2::diag(r(4.0), r(1.0)), &tol));
        let inv = inverse_metric_trivial(&h, &n, Case::Case1, Branch::Plus, CircleSign::Plus, &tol).unwrap();
        assert!(inv.approx_eq(&CMat2::diag(r(0.25), r(1.0)), &tol));
    }
}
