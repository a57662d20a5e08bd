use serde::{Deserialize, Serialize};

use crate::classifier::{check_case, Case, Kind};
use crate::error::Result;
use crate::mat::{c, r, CMat2};
use crate::metric::Normalization;
use crate::tol::Tolerances;

/// `[[cos phi_p, sin phi_p], [sin phi_p, -cos phi_p]]`
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneralParity {
    pub phi_p: f64,
}

impl GeneralParity {
    pub fn new(phi_p: f64) -> Self {
        GeneralParity { phi_p }
    }

    pub fn matrix(&self) -> CMat2 {
        let (s, c) = self.phi_p.sin_cos();
        CMat2::real(c, s, s, -c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CResult {
    pub c_matrix: CMat2,
    /// `|C^2 - 1|_F`
    pub involution_residual: f64,
    pub b_used: CMat2,
    /// `|[B, H]|_F` (pseudo) or `|{B, H}|_F` (anti), when `H` was supplied.
    pub commutant_residual: Option<f64>,
}

/// `C = (eta B)^T P^-1`.
pub fn c_operator(eta: &CMat2, b: &CMat2, p: &GeneralParity, tol: &Tolerances) -> Result<CResult> {
    let pinv = p.matrix().inverse(tol)?;
    eta.inverse(tol)?;
    let cm = (*eta * *b).transpose() * pinv;
    Ok(CResult {
        c_matrix: cm,
        involution_residual: (cm * cm - CMat2::identity()).frobenius_norm(),
        b_used: *b,
        commutant_residual: None,
    })
}

/// As [`c_operator`], also reporting how well `B` (anti-)commutes with `H`.
pub fn c_operator_for(
    h: &CMat2,
    kind: Kind,
    eta: &CMat2,
    b: &CMat2,
    p: &GeneralParity,
    tol: &Tolerances,
) -> Result<CResult> {
    let mut res = c_operator(eta, b, p, tol)?;
    let comm = match kind {
        Kind::Pseudo => b.commutator(h),
        Kind::Anti => b.anticommutator(h),
    };
    res.commutant_residual = Some(comm.frobenius_norm());
    Ok(res)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintCheck {
    pub n_modulus_ok: bool,
    pub symmetric_ok: bool,
    pub satisfiable: bool,
}

/// Conditions `|N1|^2 = |N2|^2 = 1` and `H12 = H21` for an involutive `C` in Case 1.
pub fn involution_constraint_check(h: &CMat2, n: &Normalization, tol: &Tolerances) -> Result<ConstraintCheck> {
    check_case(h, Case::Case1, tol)?;
    let t = tol.threshold(1.0);
    let n_modulus_ok = (n.n1().norm_sqr() - 1.0).abs() <= t && (n.n2().norm_sqr() - 1.0).abs() <= t;
    let symmetric_ok = (h.m[0][1] - h.m[1][0]).norm() <= tol.threshold(h.frobenius_norm());
    Ok(ConstraintCheck {
        n_modulus_ok,
        symmetric_ok,
        satisfiable: n_modulus_ok && symmetric_ok,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeyerRelations {
    /// `(|N1|^2 + |N2|^2) / (2 sqrt(1 - (r/s sin theta)^2))`, equal to 1 in the comparison metric.
    pub lhs1: f64,
    /// `(|N1|^2 - |N2|^2) / 2`, defined up to the overall sign.
    pub sin_gamma: f64,
    /// `sin_gamma^2 + (r/s sin theta)^2 < 1`
    pub bound_ok: bool,
}

/// Relations between the normalization and the angle `gamma` of the symmetric
/// `[[r e^{i theta}, s], [s, r e^{-i theta}]]` model.
pub fn geyer_relations(r_: f64, theta: f64, s: f64, n: &Normalization, tol: &Tolerances) -> Result<GeyerRelations> {
    let (st, ct) = theta.sin_cos();
    let h = CMat2::new(c(r_ * ct, r_ * st), r(s), r(s), c(r_ * ct, -r_ * st));
    check_case(&h, Case::Case1, tol)?;
    let k = r_ / s * st;
    let (a1, a2) = (n.n1().norm_sqr(), n.n2().norm_sqr());
    let sin_gamma = (a1 - a2) / 2.0;
    Ok(GeyerRelations {
        lhs1: (a1 + a2) / (2.0 * (1.0 - k * k).sqrt()),
        sin_gamma,
        bound_ok: sin_gamma * sin_gamma + k * k < 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_is_symmetric_involution() {
        let tol = Tolerances::default();
        for k in 0..8 {
            let p = GeneralParity::new(0.4 * k as f64).matrix();
            assert!(p.approx_eq(&p.transpose(), &tol));
            assert!((p * p).approx_eq(&CMat2::identity(), &tol));
        }
    }

    #[test]
    fn trivial_c_is_parity() {
        let tol = Tolerances::default();
        let p = GeneralParity::new(0.7);
        let cr = c_operator(&CMat2::identity(), &CMat2::identity(), &p, &tol).unwrap();
        assert!(cr.c_matrix.approx_eq(&p.matrix(), &tol));
        assert!(cr.involution_residual < 1e-15);
    }

    #[test]
    fn unit_normalization_gives_zero_sin_gamma() {
        let g = geyer_relations(0.5, 0.8, 1.0, &Normalization::unit(), &Tolerances::default()).unwrap();
        assert_eq!(g.sin_gamma, 0.0);
        assert!(g.bound_ok);
    }
}
