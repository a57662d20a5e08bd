use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::classifier::Case;
use crate::diagonalizer::{eigenbasis, Branch, CircleSign};
use crate::error::{Error, Result};
use crate::mat::{c, r, sigma1, sigma3, CMat2, C64, I, ONE, ZERO};
use crate::metric::{Normalization, PhaseVector};
use crate::tol::Tolerances;

/// Parameters of a catalog Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Model {
    ComplexGhost { m: f64, eps: f64, gamma: C64 },
    BenderDas { r: f64, theta: f64, s: f64, t: f64, phi: f64, ell: i32 },
    BmwMostafazadeh { r: f64, s: f64, t: f64, u: f64, phi: f64 },
    FeshbachVillars { m: f64, p2: f64 },
    ZnojilWdw { tau: C64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Regime {
    pub case: Case,
    pub predicate: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub model: Model,
    pub hamiltonian: CMat2,
    pub regimes: Vec<Regime>,
}

impl CatalogEntry {
    fn new(model: Model, tol: &Tolerances) -> Self {
        CatalogEntry {
            model,
            hamiltonian: model.hamiltonian(),
            regimes: model.regimes(tol),
        }
    }

    pub fn name(&self) -> &'static str {
        self.model.name()
    }

    /// Cases whose regime predicate holds.
    pub fn predicted_cases(&self) -> Vec<Case> {
        self.regimes.iter().filter(|r| r.holds).map(|r| r.case).collect()
    }

    pub fn has_oracle(&self, case: Case) -> bool {
        self.regimes.iter().any(|r| r.case == case)
    }

    /// Closed-form metric of the given case.
    pub fn oracle_metric(
        &self,
        case: Case,
        n: &Normalization,
        pv: &PhaseVector,
        branch: Branch,
        circle: CircleSign,
        tol: &Tolerances,
    ) -> Result<OracleMetric> {
        let regime = self.regimes.iter().find(|r| r.case == case);
        if !regime.is_some_and(|r| r.holds) {
            return Err(Error::CaseMismatch {
                requested: format!("{case} for {}", self.name()),
            });
        }
        let br = branch.sign();
        let ctx = Ctx {
            c0: n.c0(),
            c3: n.c3(),
            a: n.a(),
            b: n.b(),
            cv: pv.phi.cos(),
            sv: pv.phi.sin(),
            br,
        };
        let (eta, parts) = match self.model {
            Model::ComplexGhost { eps, gamma, .. } => split(ghost_oracle(eps, gamma, case, &ctx)),
            Model::BenderDas { r, theta, s, t, phi, ell } => {
                split(bender_das_oracle(r, theta, s, t, phi, ell, case, &ctx))
            }
            Model::BmwMostafazadeh { s, t, u, phi, .. } => split(bmw_oracle(s, t, u, phi, case, &ctx)),
            Model::FeshbachVillars { m, p2 } => {
                let h = self.hamiltonian;
                let w = (p2 + m * m).sqrt();
                split((sigma3() * h * (ctx.c0 / w), sigma3() * (br * ctx.c3)))
            }
            Model::ZnojilWdw { tau } => {
                let rt = tau.re;
                let (n1, n2) = (n.n1().norm_sqr(), n.n2().norm_sqr());
                let m1 = CMat2::real((-rt).exp(), br, br, rt.exp()) * (n1 * rt.exp() / 2.0);
                let m2 = CMat2::real((-rt).exp(), -br, -br, rt.exp()) * (n2 * (-rt).exp() / 2.0);
                (m1 + m2, None)
            }
        };
        // The displays take the conjugate of the square-root prefactor as the
        // square root of the conjugate, which flips the sign when the argument
        // is a negative real number.
        let s = match self.model {
            Model::FeshbachVillars { .. } | Model::ZnojilWdw { .. } => 1.0,
            _ => formal_conjugation_sign(&self.hamiltonian, case, branch, tol)?,
        } * circle.sign();
        Ok(OracleMetric {
            eta: eta * s,
            parts: parts.map(|(a, b)| (a * s, b * s)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleMetric {
    pub eta: CMat2,
    /// `(eta0, eta3)` or `(eta1, eta2)` where the display separates them.
    pub parts: Option<(CMat2, CMat2)>,
}

fn split(p: (CMat2, CMat2)) -> (CMat2, Option<(CMat2, CMat2)>) {
    (p.0 + p.1, Some(p))
}

/// `-1` when `D / (E1 - E2)` is a negative real number, else `+1`.
pub fn formal_conjugation_sign(h: &CMat2, case: Case, branch: Branch, tol: &Tolerances) -> Result<f64> {
    let z = eigenbasis(h, case, branch, tol)?.prefactor_arg();
    Ok(if z.re < 0.0 && z.im.abs() <= 1e-9 * z.norm() {
        -1.0
    } else {
        1.0
    })
}

struct Ctx {
    c0: f64,
    c3: f64,
    a: f64,
    b: f64,
    cv: C64,
    sv: C64,
    br: f64,
}

fn ghost_oracle(eps: f64, g: C64, case: Case, x: &Ctx) -> (CMat2, CMat2) {
    let ag = g.norm();
    let (gr, gi) = (g.re, g.im);
    let big_m = CMat2::new(ONE, I * g.conj() * eps / (ag * ag), -I * g * eps / (ag * ag), ONE);
    let big_s = CMat2::new(ZERO, g.conj() / ag, g / ag, ZERO);
    let big_t = CMat2::new(r(eps), I * g.conj(), -I * g, r(eps));
    let (cv, sv, br) = (x.cv, x.sv, x.br);
    match case {
        Case::Case1 => {
            let q = (ag * ag - eps * eps).sqrt();
            (big_m * (x.c0 * ag / q), big_s * (br * x.c3))
        }
        Case::Case2 => {
            let q = (eps * eps - ag * ag).sqrt();
            let p = cv * gr + sv * gi;
            let m = sv * gr - cv * gi;
            (
                (big_s * (p / ag) + big_m * (m * br / q)) * x.a,
                (big_s * (m / ag) - big_m * (p * br / q)) * x.b,
            )
        }
        Case::Case3 => {
            let q = (eps * eps - ag * ag).sqrt();
            (big_t * (-br * x.c0 / q), sigma3() * x.c3)
        }
        Case::Case4 => {
            let q = (ag * ag - eps * eps).sqrt();
            let p = cv * gi - sv * gr;
            let m = sv * gi + cv * gr;
            (
                (big_t * (p / q) - sigma3() * (m * br)) * (x.a / ag),
                (big_t * (m / q) + sigma3() * (p * br)) * (x.b / ag),
            )
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn bender_das_oracle(
    r_: f64,
    theta: f64,
    s: f64,
    t: f64,
    phi: f64,
    ell: i32,
    case: Case,
    x: &Ctx,
) -> (CMat2, CMat2) {
    let rs = r_ * theta.sin();
    let st = s * t;
    let ep = (I * phi).exp();
    let em = (-I * phi).exp();
    let sgn = if ell.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let j = CMat2::new(ZERO, ep, em, ZERO);
    let k = CMat2::new(r(t), -I * rs * ep, I * rs * em, r(s));
    let l = CMat2::new(r(sgn * r_ * t), -I * st * ep, I * st * em, r(sgn * r_ * s));
    let dg = CMat2::diag(r(t), r(-s));
    let (cv, sv, br) = (x.cv, x.sv, x.br);
    let (cp, sp) = (r(phi.cos()), r(phi.sin()));
    let (sum, dif) = ((s + t) / (2.0 * st), (s - t) / (2.0 * st));
    match case {
        Case::Case1 => {
            let q = (st - rs * rs).sqrt();
            let pre = (st / (st - rs * rs)).sqrt();
            (
                (k * sum + j * (br * dif * q)) * (x.c0 * pre),
                (k * dif + j * (br * sum * q)) * (x.c3 * pre),
            )
        }
        Case::Case2 => {
            let q = (rs * rs - st).sqrt();
            (
                (j * (cv * cp - sv * sp) + k * ((cv * sp + sv * cp) * (br / q))) * x.a,
                (j * (sv * cp + cv * sp) + k * ((sv * sp - cv * cp) * (br / q))) * x.b,
            )
        }
        Case::Case3 => {
            let q = (r_ * r_ - st).sqrt();
            (
                (dg * dif + l * (br * sum / q)) * x.c0,
                (dg * sum + l * (br * dif / q)) * x.c3,
            )
        }
        Case::Case4 => {
            let q = (st - r_ * r_).sqrt();
            let pre = (st / (st - r_ * r_)).sqrt() / st;
            (
                (dg * (-(cv * cp - sv * sp) * (br * q)) + l * (cv * sp + sv * cp)) * (x.a * pre),
                (dg * (-(sv * cp + cv * sp) * (br * q)) + l * (sv * sp - cv * cp)) * (x.b * pre),
            )
        }
    }
}

fn bmw_oracle(s: f64, t: f64, u: f64, phi: f64, case: Case, x: &Ctx) -> (CMat2, CMat2) {
    let (sp, cp) = phi.sin_cos();
    let g = CMat2::real(cp, sp, sp, -cp);
    let f = CMat2::real(-sp, cp, cp, sp);
    let a_ = CMat2::new(r(s), c(0.0, t), c(0.0, -t), r(s));
    let b_ = CMat2::new(r(t), c(0.0, s), c(0.0, -s), r(t));
    let (cv, sv, br) = (x.cv, x.sv, x.br);
    let (t2, u2, s2) = (t * t, u * u, s * s);
    let (w, p) = if case.real_split() {
        let w = (t2 + u2 - s2).sqrt();
        (w, 1.0 / w / ((br * w + t * cp).powi(2) + (s * sp).powi(2)).sqrt())
    } else {
        let w = (s2 - t2 - u2).sqrt();
        (w, 1.0 / w / ((br * w - s * sp).powi(2) + (t * cp).powi(2)).sqrt())
    };
    match case {
        Case::Case1 => {
            let e0 = CMat2::new(r(t2 + u2), c(0.0, s * t), c(0.0, -s * t), r(t2 + u2)) + g * (s * u) + b_ * (br * cp * w);
            let rot = CMat2::new(ZERO, -I * u, I * u, ZERO);
            let e3 = (g * (t2 - s2) - a_ * u) * cp + (g * t + rot) * (br * w);
            (e0 * (x.c0 * p), e3 * (x.c3 * p))
        }
        Case::Case2 => {
            let x1 = (a_ * u - g * (t2 - s2)) * sp - (CMat2::identity() * u + g * s) * (br * w);
            // the off-diagonal entries carry i (s^2 - u^2)
            let x2 = CMat2::new(r(t * s), c(0.0, s2 - u2), c(0.0, u2 - s2), r(t * s)) + g * (t * u) - b_ * (br * sp * w);
            (
                (x1 * cv - x2 * sv) * (x.a * p),
                (x1 * sv + x2 * cv) * (x.b * p),
            )
        }
        Case::Case3 => {
            let e0 = a_ * s + g * (s * u) - (a_ * sp + sigma1() * u) * (br * w);
            let e3 = sigma3() * (s2 - t2 - u2) + (g * (t2 - s2) - a_ * u) * cp + f * (br * s * w);
            (e0 * (x.c0 * p), e3 * (x.c3 * p))
        }
        Case::Case4 => {
            let x1 = (a_ * sp + sigma1() * u) * u + f * (cp * (t2 - s2) + br * t * w);
            let x2 = a_ * t + g * (t * u) + (a_ * cp + sigma3() * u) * (br * w);
            (
                (x1 * cv - x2 * sv) * (x.a * p),
                (x1 * sv + x2 * cv) * (x.b * p),
            )
        }
    }
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::ComplexGhost { .. } => "complex-ghost",
            Model::BenderDas { .. } => "bender-das",
            Model::BmwMostafazadeh { .. } => "bmw-mostafazadeh",
            Model::FeshbachVillars { .. } => "feshbach-villars",
            Model::ZnojilWdw { .. } => "znojil-wdw",
        }
    }

    pub fn hamiltonian(&self) -> CMat2 {
        match *self {
            Model::ComplexGhost { m, eps, gamma } => CMat2::new(c(m, -eps), gamma.conj(), gamma, c(m, eps)),
            Model::BenderDas { r, theta, s, t, phi, .. } => CMat2::new(
                C64::from_polar(r, theta),
                C64::from_polar(s, phi),
                C64::from_polar(t, -phi),
                C64::from_polar(r, -theta),
            ),
            Model::BmwMostafazadeh { r, s, t, u, phi } => {
                let (sp, cp) = phi.sin_cos();
                let d = c(t * cp, -s * sp);
                CMat2::new(r + d, c(t * sp, s * cp - u), c(t * sp, s * cp + u), r - d)
            }
            Model::FeshbachVillars { m, p2 } => {
                let q = p2 / (2.0 * m);
                CMat2::real(m + q, q, -q, -(m + q))
            }
            Model::ZnojilWdw { tau } => CMat2::new(ZERO, (tau * 2.0).exp(), ONE, ZERO),
        }
    }

    /// The regime predicates of each case that has a closed-form metric.
    pub fn regimes(&self, tol: &Tolerances) -> Vec<Regime> {
        let zero = |x: f64| x.abs() <= tol.eq_abs;
        let reg = |case: Case, predicate: &str, holds: bool| Regime {
            case,
            predicate: predicate.to_string(),
            holds,
        };
        match *self {
            Model::ComplexGhost { m, eps, gamma } => {
                let (g2, e2) = (gamma.norm_sqr(), eps * eps);
                vec![
                    reg(Case::Case1, "|gamma|^2 > eps^2", g2 > e2),
                    reg(Case::Case2, "eps^2 > |gamma|^2", e2 > g2),
                    reg(Case::Case3, "eps^2 > |gamma|^2, m = 0", e2 > g2 && zero(m)),
                    reg(Case::Case4, "|gamma|^2 > eps^2, m = 0", g2 > e2 && zero(m)),
                ]
            }
            Model::BenderDas { r, theta, s, t, ell, .. } => {
                let (st, rs) = (s * t, r * theta.sin());
                // the anti displays take H11 = (-1)^ell i r
                let sign = if ell.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
                let anti = zero(r * theta.cos()) && (zero(r) || (theta.sin() - sign).abs() <= tol.threshold(1.0));
                vec![
                    reg(Case::Case1, "st > (r sin theta)^2", st > rs * rs),
                    reg(Case::Case2, "st < (r sin theta)^2", st < rs * rs),
                    reg(Case::Case3, "r cos theta = 0, sin theta = (-1)^ell, r^2 > st", anti && r * r > st && st != 0.0),
                    reg(Case::Case4, "r cos theta = 0, sin theta = (-1)^ell, st > r^2", anti && st > r * r),
                ]
            }
            Model::BmwMostafazadeh { r, s, t, u, .. } => {
                let (q, s2) = (t * t + u * u, s * s);
                vec![
                    reg(Case::Case1, "t^2 + u^2 > s^2", q > s2),
                    reg(Case::Case2, "t^2 + u^2 < s^2", q < s2),
                    reg(Case::Case3, "r = 0, s^2 > t^2 + u^2", zero(r) && s2 > q),
                    reg(Case::Case4, "r = 0, t^2 + u^2 > s^2", zero(r) && q > s2),
                ]
            }
            Model::FeshbachVillars { .. } => vec![reg(Case::Case1, "m > 0", true)],
            Model::ZnojilWdw { .. } => vec![reg(Case::Case1, "Im tau = l pi", true)],
        }
    }
}

pub fn complex_ghost(m: f64, eps: f64, gamma: C64) -> CatalogEntry {
    CatalogEntry::new(Model::ComplexGhost { m, eps, gamma }, &Tolerances::default())
}

/// Closed forms for the anti cases use `ell = 0`; see [`bender_das_ell`].
pub fn bender_das(r: f64, theta: f64, s: f64, t: f64, phi: f64) -> CatalogEntry {
    bender_das_ell(r, theta, s, t, phi, 0)
}

/// `H11 = r e^{i theta}` equals `(-1)^ell i r` in the anti cases.
pub fn bender_das_ell(r: f64, theta: f64, s: f64, t: f64, phi: f64, ell: i32) -> CatalogEntry {
    CatalogEntry::new(
        Model::BenderDas {
            r,
            theta,
            s,
            t,
            phi,
            ell,
        },
        &Tolerances::default(),
    )
}

pub fn bmw_mostafazadeh(r: f64, s: f64, t: f64, u: f64, phi: f64) -> CatalogEntry {
    CatalogEntry::new(Model::BmwMostafazadeh { r, s, t, u, phi }, &Tolerances::default())
}

pub fn feshbach_villars(m: f64, p2: f64) -> Result<CatalogEntry> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "m",
            reason: "must be positive".into(),
        });
    }
    if !(p2 >= 0.0 && p2.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "p2",
            reason: "must be non-negative".into(),
        });
    }
    Ok(CatalogEntry::new(Model::FeshbachVillars { m, p2 }, &Tolerances::default()))
}

/// Requires `Im tau` to be an integer multiple of pi.
pub fn znojil_wdw(tau: C64, tol: &Tolerances) -> Result<CatalogEntry> {
    let ell = (tau.im / PI).round();
    if !tau.is_finite() || (tau.im - ell * PI).abs() > tol.threshold(tau.im.abs()) {
        return Err(Error::InvalidImaginaryPart { im: tau.im });
    }
    Ok(CatalogEntry::new(Model::ZnojilWdw { tau }, tol))
}

/// Normalization that turns the Znojil metric into `[[e^{-Re tau}, beta], [beta, e^{Re tau}]]`.
pub fn znojil_normalization(beta: f64, re_tau: f64, branch: Branch) -> Result<Normalization> {
    if !(beta.abs() < 1.0) {
        return Err(Error::InvalidParameter {
            name: "beta",
            reason: format!("|beta| < 1 required for non-negative |N1|^2, |N2|^2, got {beta}"),
        });
    }
    let br = branch.sign();
    let n1 = ((1.0 + br * beta) * (-re_tau).exp()).sqrt();
    let n2 = ((1.0 - br * beta) * re_tau.exp()).sqrt();
    Normalization::new(r(n1), r(n2))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamSchema {
    pub name: &'static str,
    pub complex: bool,
    pub default: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntrySchema {
    pub name: &'static str,
    pub params: Vec<ParamSchema>,
}

pub const ENTRY_NAMES: [&str; 6] = [
    "complex-ghost",
    "bender-das",
    "bmw-mostafazadeh",
    "feshbach-villars",
    "znojil-wdw",
    "lee-wick",
];

fn ps(name: &'static str, complex: bool, default: [f64; 2]) -> ParamSchema {
    ParamSchema { name, complex, default }
}

pub fn schema(name: &str) -> Result<EntrySchema> {
    let params = match name {
        "complex-ghost" => vec![ps("m", false, [1.0, 0.0]), ps("eps", false, [0.5, 0.0]), ps("gamma", true, [1.0, 0.0])],
        "bender-das" => vec![
            ps("r", false, [1.0, 0.0]),
            ps("theta", false, [0.5, 0.0]),
            ps("s", false, [1.0, 0.0]),
            ps("t", false, [1.0, 0.0]),
            ps("phi", false, [0.0, 0.0]),
            ps("ell", false, [0.0, 0.0]),
        ],
        "bmw-mostafazadeh" => vec![
            ps("r", false, [0.0, 0.0]),
            ps("s", false, [0.5, 0.0]),
            ps("t", false, [1.0, 0.0]),
            ps("u", false, [0.0, 0.0]),
            ps("phi", false, [0.0, 0.0]),
        ],
        "feshbach-villars" => vec![ps("m", false, [1.0, 0.0]), ps("p2", false, [0.0, 0.0])],
        "znojil-wdw" => vec![ps("tau", true, [0.0, 0.0])],
        "lee-wick" => vec![ps("omega", true, [1.0, -0.5])],
        _ => return Err(Error::NotFound(name.to_string())),
    };
    Ok(EntrySchema {
        name: ENTRY_NAMES.iter().find(|n| **n == name).copied().expect("schema names are listed"),
        params,
    })
}

pub fn catalog_list() -> Vec<EntrySchema> {
    ENTRY_NAMES.iter().map(|n| schema(n).expect("listed")).collect()
}

/// Builds a 2x2 entry from named parameters; missing ones take schema defaults.
pub fn build(name: &str, params: &BTreeMap<String, C64>, tol: &Tolerances) -> Result<CatalogEntry> {
    let sch = schema(name)?;
    if name == "lee-wick" {
        return Err(Error::InvalidParameter {
            name: "name",
            reason: "lee-wick is a 4x4 system; use the leewick module".into(),
        });
    }
    for key in params.keys() {
        if !sch.params.iter().any(|p| p.name == key) {
            return Err(Error::NotFound(format!("parameter {key} of {name}")));
        }
    }
    let mut vals = BTreeMap::new();
    for p in &sch.params {
        let v = params.get(p.name).copied().unwrap_or(c(p.default[0], p.default[1]));
        if !p.complex && v.im != 0.0 {
            return Err(Error::InvalidParameter {
                name: p.name,
                reason: "must be real".into(),
            });
        }
        if !v.is_finite() {
            return Err(Error::InvalidParameter {
                name: p.name,
                reason: "must be finite".into(),
            });
        }
        vals.insert(p.name, v);
    }
    let re = |k: &str| vals[k].re;
    let model = match name {
        "complex-ghost" => Model::ComplexGhost {
            m: re("m"),
            eps: re("eps"),
            gamma: vals["gamma"],
        },
        "bender-das" => {
            let ell = re("ell");
            if ell.fract() != 0.0 {
                return Err(Error::InvalidParameter {
                    name: "ell",
                    reason: "must be an integer".into(),
                });
            }
            Model::BenderDas {
                r: re("r"),
                theta: re("theta"),
                s: re("s"),
                t: re("t"),
                phi: re("phi"),
                ell: ell as i32,
            }
        }
        "bmw-mostafazadeh" => Model::BmwMostafazadeh {
            r: re("r"),
            s: re("s"),
            t: re("t"),
            u: re("u"),
            phi: re("phi"),
        },
        "feshbach-villars" => return feshbach_villars(re("m"), re("p2")),
        "znojil-wdw" => return znojil_wdw(vals["tau"], tol),
        _ => unreachable!(),
    };
    Ok(CatalogEntry::new(model, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_all_entries() {
        let names: Vec<_> = catalog_list().iter().map(|e| e.name).collect();
        assert_eq!(names, ENTRY_NAMES);
        assert!(matches!(schema("nope"), Err(Error::NotFound(_))));
    }

    #[test]
    fn ghost_matrix() {
        let e = complex_ghost(1.0, 2.0, c(0.5, 0.25));
        assert_eq!(e.hamiltonian, CMat2::new(c(1.0, -2.0), c(0.5, -0.25), c(0.5, 0.25), c(1.0, 2.0)));
        assert_eq!(e.predicted_cases(), vec![Case::Case2]);
    }

    #[test]
    fn znojil_rejects_bad_tau() {
        let tol = Tolerances::default();
        assert!(znojil_wdw(c(0.3, PI), &tol).is_ok());
        assert!(matches!(znojil_wdw(c(0.3, 1.0), &tol), Err(Error::InvalidImaginaryPart { .. })));
    }

    #[test]
    fn znojil_beta_bound() {
        assert!(znojil_normalization(1.0, 0.0, Branch::Plus).is_err());
        assert!(znojil_normalization(-0.99, 0.0, Branch::Plus).is_ok());
    }

    #[test]
    fn unknown_parameter() {
        let mut p = BTreeMap::new();
        p.insert("zeta".to_string(), ONE);
        assert!(build("complex-ghost", &p, &Tolerances::default()).is_err());
    }
}
