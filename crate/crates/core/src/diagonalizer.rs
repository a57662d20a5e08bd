use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classifier::{check_case, Case};
use crate::error::{Error, Result};
use crate::mat::{
    conj3, cross3, csqrt, dot3, dot_sigma, scale3, CMat2, Vec3, C64, I, ONE, ZERO,
};
use crate::pauli::pauli_decompose;
use crate::tol::Tolerances;

/// Selects the sign of `(E1 - E2)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Branch {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }
}

impl FromStr for Branch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Branch::Plus),
            "minus" | "-" => Ok(Branch::Minus),
            _ => Err(Error::InvalidParameter {
                name: "branch",
                reason: format!("expected plus or minus, got {s:?}"),
            }),
        }
    }
}

/// Encircled overall sign of a metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CircleSign {
    #[default]
    Plus,
    Minus,
}

impl CircleSign {
    pub fn sign(self) -> f64 {
        match self {
            CircleSign::Plus => 1.0,
            CircleSign::Minus => -1.0,
        }
    }
}

impl FromStr for CircleSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(CircleSign::Plus),
            "minus" | "-" => Ok(CircleSign::Minus),
            _ => Err(Error::InvalidParameter {
                name: "circle",
                reason: format!("expected plus or minus, got {s:?}"),
            }),
        }
    }
}

/// Frames with `|D| <= RETRY_RATIO * |(E1-E2)/2|` are rebuilt from the other branch.
pub const RETRY_RATIO: f64 = 1e-6;

/// Data of the efficient form `X = p (1 - K/D)`, `K = [[0, -H12], [H21, 0]]`,
/// optionally preceded by the permutation `[[0, 1], [-1, 0]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frame {
    /// `|p|^2 = |D| / (2 |(E1-E2)/2|)`
    pub p2: f64,
    pub p: C64,
    pub d: C64,
    pub h12: C64,
    pub h21: C64,
    pub permuted: bool,
}

fn permutation() -> CMat2 {
    CMat2::new(ZERO, ONE, -ONE, ZERO)
}

/// `P^+ M P` for the permutation frame.
fn permute(m: &CMat2) -> CMat2 {
    let [[a, g], [h, b]] = m.m;
    CMat2::new(b, -h, -g, a)
}

impl Frame {
    fn std(&self) -> (CMat2, CMat2) {
        let k = CMat2::new(ZERO, -self.h12, self.h21, ZERO).scale(self.d.inv());
        (
            (CMat2::identity() - k).scale(self.p),
            (CMat2::identity() + k).scale(self.p),
        )
    }

    /// `(X, X^-1)`
    pub fn matrices(&self) -> (CMat2, CMat2) {
        let (x, xi) = self.std();
        if self.permuted {
            let p = permutation();
            (p * x, xi * (-p))
        } else {
            (x, xi)
        }
    }

    /// `X^+ M X` entry by entry.
    pub fn conj_sandwich(&self, m: &CMat2) -> CMat2 {
        let m = if self.permuted { permute(m) } else { *m };
        let (u, v) = (self.h12 / self.d, self.h21 / self.d);
        let (u2, v2) = (u.norm_sqr(), v.norm_sqr());
        let [[a, g], [h, b]] = m.m;
        let diag = CMat2::new(
            a + b * v2,
            a * u - b * v.conj(),
            a * u.conj() - b * v,
            b + a * u2,
        );
        let off = CMat2::new(
            -(g * v + h * v.conj()),
            g - h * u * v.conj(),
            h - g * u.conj() * v,
            g * u.conj() + h * u,
        );
        (diag + off) * self.p2
    }

    /// `X^-1 M (X^+)^-1` entry by entry.
    pub fn inv_sandwich(&self, m: &CMat2) -> CMat2 {
        let m = if self.permuted { permute(m) } else { *m };
        let (u, v) = (self.h12 / self.d, self.h21 / self.d);
        let (u2, v2) = (u.norm_sqr(), v.norm_sqr());
        let [[a, g], [h, b]] = m.m;
        let diag = CMat2::new(
            a + b * u2,
            a * v.conj() - b * u,
            a * v - b * u.conj(),
            b + a * v2,
        );
        let off = CMat2::new(
            -(h * u + g * u.conj()),
            g - h * u * v.conj(),
            h - g * v * u.conj(),
            h * v.conj() + g * v,
        );
        (diag + off) * self.p2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenSystem {
    pub e1: C64,
    pub e2: C64,
    pub halfdiff: C64,
    pub nsigma: CMat2,
    pub x: CMat2,
    pub xinv: CMat2,
    pub xdag: CMat2,
    pub xdag_inv: CMat2,
    pub case: Case,
    pub branch: Branch,
    pub frame: Frame,
}

impl EigenSystem {
    /// `D / (2 (E1-E2)/2)` of the unpermuted frame, the argument of the
    /// square-root prefactor.
    pub fn prefactor_arg(&self) -> C64 {
        self.frame.p * self.frame.p
    }
}

fn halfdiff(h: &CMat2, case: Case, branch: Branch) -> C64 {
    let disc = crate::classifier::key_quantities(h).disc;
    let s = branch.sign();
    if case.real_split() {
        csqrt(disc) * 0.5 * s
    } else {
        I * csqrt(-disc) * 0.5 * s
    }
}

pub fn eigenvalues(h: &CMat2, case: Case, branch: Branch, tol: &Tolerances) -> Result<(C64, C64)> {
    check_case(h, case, tol)?;
    let hd = halfdiff(h, case, branch);
    let mean = h.trace() * 0.5;
    Ok((mean + hd, mean - hd))
}

pub fn unit_vector_matrix(h: &CMat2, case: Case, branch: Branch, tol: &Tolerances) -> Result<CMat2> {
    check_case(h, case, tol)?;
    let hd = halfdiff(h, case, branch);
    let mean = h.trace() * 0.5;
    Ok((*h - CMat2::identity() * mean).scale(hd.inv()))
}

fn frame_for(h: &CMat2, hd: C64) -> Frame {
    let d = hd + (h.m[0][0] - h.m[1][1]) * 0.5;
    let z = d / (hd * 2.0);
    Frame {
        p2: z.norm(),
        p: csqrt(z),
        d,
        h12: h.m[0][1],
        h21: h.m[1][0],
        permuted: false,
    }
}

pub fn eigenbasis(h: &CMat2, case: Case, branch: Branch, tol: &Tolerances) -> Result<EigenSystem> {
    check_case(h, case, tol)?;
    let hd = halfdiff(h, case, branch);
    let mean = h.trace() * 0.5;
    let delta = (h.m[0][0] - h.m[1][1]) * 0.5;

    let frame = if h.m[0][1] == ZERO && h.m[1][0] == ZERO {
        // diagonal: identity or permutation, no square roots
        let permuted = (hd + delta).norm() < (delta - hd).norm();
        Frame {
            p2: 1.0,
            p: ONE,
            d: ONE,
            h12: ZERO,
            h21: ZERO,
            permuted,
        }
    } else {
        let f = frame_for(h, hd);
        if f.d.norm() > RETRY_RATIO * hd.norm() {
            f
        } else {
            let g = frame_for(h, -hd);
            if g.d.norm() <= RETRY_RATIO * hd.norm() {
                return Err(Error::DegenerateFrame);
            }
            Frame { permuted: true, ..g }
        }
    };

    let (x, xinv) = frame.matrices();
    Ok(EigenSystem {
        e1: mean + hd,
        e2: mean - hd,
        halfdiff: hd,
        nsigma: (*h - CMat2::identity() * mean).scale(hd.inv()),
        x,
        xinv,
        xdag: x.dagger(),
        xdag_inv: xinv.dagger(),
        case,
        branch,
        frame,
    })
}

/// Perpendicular unit vectors built from `n x n*`. The second vector is the
/// formal conjugate partner `(n* x n) / sqrt(...)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerpPair {
    pub n_perp: Vec3,
    pub n_perp_star: Vec3,
}

pub fn cross_perp(n: &Vec3) -> Result<PerpPair> {
    let nc = conj3(n);
    let v = cross3(n, &nc);
    let w = cross3(&nc, n);
    let vv = dot3(&v, &v);
    if vv.norm() < 1e-24 {
        return Err(Error::InvalidPerpVector { residual: vv.norm() });
    }
    Ok(PerpPair {
        n_perp: scale3(csqrt(vv).inv(), &v),
        n_perp_star: scale3(csqrt(dot3(&w, &w)).inv(), &w),
    })
}

/// `P = +- n_perp . sigma` after checking orthonormality against `n`.
pub fn generalized_parity(n: &Vec3, n_perp: &Vec3, sign: Branch, tol: &Tolerances) -> Result<CMat2> {
    let residual = (dot3(n_perp, n_perp) - ONE).norm().max(dot3(n, n_perp).norm());
    if residual > tol.threshold(1.0) * 100.0 {
        return Err(Error::InvalidPerpVector { residual });
    }
    Ok(dot_sigma(n_perp) * sign.sign())
}

/// Unit vector `n` of `H = tr/2 + (E1-E2)/2 n.sigma`.
pub fn unit_vector(h: &CMat2, case: Case, branch: Branch, tol: &Tolerances) -> Result<Vec3> {
    let ns = unit_vector_matrix(h, case, branch, tol)?;
    Ok(pauli_decompose(&ns).a)
}

/// The product form `X = (1 + n3)^(1/2) / sqrt(2) * (1 + sigma3 n.sigma) / (1 + n3)`.
pub fn x_product_form(es: &EigenSystem) -> CMat2 {
    let n3 = pauli_decompose(&es.nsigma).a[2];
    let s = csqrt(ONE + n3) * std::f64::consts::SQRT_2;
    let x = (CMat2::identity() + crate::mat::sigma3() * es.nsigma).scale(s.inv());
    if es.frame.permuted {
        permutation() * x
    } else {
        x
    }
}

pub fn diag(es: &EigenSystem) -> CMat2 {
    CMat2::diag(es.e1, es.e2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{c, r, sigma3};

    #[test]
    fn ghost_case1_energies() {
        let h = CMat2::new(r(1.0), r(3.0), r(3.0), r(1.0));
        let (e1, e2) = eigenvalues(&h, Case::Case1, Branch::Plus, &Tolerances::default()).unwrap();
        assert_eq!((e1, e2), (r(4.0), r(-2.0)));
    }

    #[test]
    fn quadratic_roots() {
        let h = CMat2::real(1.0, 2.0, 0.5, 1.0);
        let (e1, e2) = eigenvalues(&h, Case::Case1, Branch::Plus, &Tolerances::default()).unwrap();
        assert!((e1 - r(2.0)).norm() < 1e-15 && e2.norm() < 1e-15);
    }

    #[test]
    fn sigma3_unit_vector() {
        let ns = unit_vector_matrix(&sigma3(), Case::Case1, Branch::Plus, &Tolerances::default()).unwrap();
        assert_eq!(ns, sigma3());
    }

    #[test]
    fn diagonal_fast_path() {
        let tol = Tolerances::default();
        let h = CMat2::diag(r(1.0), r(3.0));
        for b in [Branch::Plus, Branch::Minus] {
            let es = eigenbasis(&h, Case::Case1, b, &tol).unwrap();
            let d = es.x * h * es.xinv;
            assert!(d.approx_eq(&diag(&es), &tol), "{b:?} {d:?}");
            assert!((es.x.det() - ONE).norm() < 1e-15);
        }
    }

    #[test]
    fn sandwiches_match_products() {
        let tol = Tolerances::default();
        let h = CMat2::new(c(0.3, 0.1), c(1.2, -0.4), c(0.2, 0.9), c(-0.5, -0.1));
        let h = h + h.dagger();
        let m = CMat2::new(c(0.7, 0.2), c(-1.1, 0.3), c(0.4, -0.8), c(0.1, 0.6));
        for b in [Branch::Plus, Branch::Minus] {
            let es = eigenbasis(&h, Case::Case1, b, &tol).unwrap();
            let a = es.frame.conj_sandwich(&m);
            assert!(a.approx_eq(&(es.xdag * m * es.x), &tol));
            let a = es.frame.inv_sandwich(&m);
            assert!(a.approx_eq(&(es.xinv * m * es.xdag_inv), &tol));
        }
    }

    #[test]
    fn perp_from_n_is_orthonormal() {
        let tol = Tolerances::default();
        let n = [c(0.6, 0.3), c(0.2, -0.1), c(0.0, 0.0)];
        let nn = csqrt(dot3(&n, &n));
        let n = scale3(nn.inv(), &n);
        let pp = cross_perp(&n).unwrap();
        let p = generalized_parity(&n, &pp.n_perp, Branch::Plus, &tol).unwrap();
        assert!((p * p).approx_eq(&CMat2::identity(), &tol));
        assert!(generalized_parity(&n, &[ONE, ONE, ZERO], Branch::Plus, &tol).is_err());
    }
}
