use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat::{CMat2, C64, I};
use crate::tol::Tolerances;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Case1,
    Case2,
    Case3,
    Case4,
}

/// Sign in `H^+ = +- eta H eta^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Pseudo,
    Anti,
}

impl Kind {
    pub fn sign(self) -> f64 {
        match self {
            Kind::Pseudo => 1.0,
            Kind::Anti => -1.0,
        }
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pseudo" | "+" => Ok(Kind::Pseudo),
            "anti" | "-" => Ok(Kind::Anti),
            _ => Err(Error::InvalidParameter {
                name: "kind",
                reason: format!("expected pseudo or anti, got {s:?}"),
            }),
        }
    }
}

impl Case {
    pub const ALL: [Case; 4] = [Case::Case1, Case::Case2, Case::Case3, Case::Case4];

    pub fn kind(self) -> Kind {
        match self {
            Case::Case1 | Case::Case2 => Kind::Pseudo,
            Case::Case3 | Case::Case4 => Kind::Anti,
        }
    }

    pub fn trivial(self) -> bool {
        matches!(self, Case::Case1 | Case::Case3)
    }

    /// Whether `tr^2 - 4 det` is positive in this case.
    pub fn real_split(self) -> bool {
        matches!(self, Case::Case1 | Case::Case4)
    }

    pub fn from_kind_phase(kind: Kind, trivial: bool) -> Case {
        match (kind, trivial) {
            (Kind::Pseudo, true) => Case::Case1,
            (Kind::Pseudo, false) => Case::Case2,
            (Kind::Anti, true) => Case::Case3,
            (Kind::Anti, false) => Case::Case4,
        }
    }

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case{}", self.index())
    }
}

impl FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim_start_matches("case") {
            "1" => Ok(Case::Case1),
            "2" => Ok(Case::Case2),
            "3" => Ok(Case::Case3),
            "4" => Ok(Case::Case4),
            _ => Err(Error::InvalidParameter {
                name: "case",
                reason: format!("expected case1..case4, got {s:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HermiticityKind {
    PseudoHermitian,
    AntiPseudoHermitian,
    Both,
    Neither,
}

impl HermiticityKind {
    pub fn admits(self, kind: Kind) -> bool {
        matches!(
            (self, kind),
            (HermiticityKind::Both, _)
                | (HermiticityKind::PseudoHermitian, Kind::Pseudo)
                | (HermiticityKind::AntiPseudoHermitian, Kind::Anti)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhaseKind {
    Trivial,
    NonTrivial,
    Exceptional,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KeyQuantities {
    pub sum: C64,
    pub disc: C64,
    pub i_sum: C64,
    pub i_disc: C64,
}

pub fn key_quantities(h: &CMat2) -> KeyQuantities {
    let [[h11, h12], [h21, h22]] = h.m;
    let sum = h11 + h22;
    let d = h11 - h22;
    let disc = d * d + h12 * h21 * 4.0;
    KeyQuantities {
        sum,
        disc,
        i_sum: I * sum,
        i_disc: -disc,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub trace: C64,
    pub det: C64,
    pub disc: C64,
    pub i_disc: C64,
    pub trace_im: f64,
    pub trace_re: f64,
    pub disc_im: f64,
    pub norm: f64,
    pub threshold_trace: f64,
    pub threshold_disc: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: HermiticityKind,
    pub phase_if_pseudo: Option<PhaseKind>,
    pub phase_if_anti: Option<PhaseKind>,
    pub case_labels: Vec<Case>,
    pub exceptional: bool,
    pub diagnostics: Diagnostics,
}

impl Classification {
    pub fn admits(&self, case: Case) -> bool {
        self.case_labels.contains(&case)
    }

    pub fn case_for(&self, kind: Kind) -> Option<Case> {
        self.case_labels.iter().copied().find(|c| c.kind() == kind)
    }

    /// The single admitted case, or an error when the choice is ambiguous.
    pub fn unique_case(&self) -> Result<Case> {
        if self.exceptional {
            return Err(Error::ExceptionalPoint {
                disc_abs: self.diagnostics.disc.norm(),
            });
        }
        match self.case_labels.as_slice() {
            [c] => Ok(*c),
            [] => Err(Error::NotClassifiable {
                diagnostics: self.diagnostics,
            }),
            _ => Err(Error::KindRequired(format!(
                "both {} and {} are admitted",
                self.case_labels[0], self.case_labels[1]
            ))),
        }
    }
}

/// Decides hermiticity kind, phase and admissible cases.
///
/// Reality of a quantity q is tested as `|Im q| <= classify_scale * s`, where s
/// is `max(1, |q|, |H|^k)` with k the degree of q in the entries of H.
pub fn classify(h: &CMat2, tol: &Tolerances) -> Result<Classification> {
    let kq = key_quantities(h);
    let norm = h.frobenius_norm();
    let cs = tol.classify_scale;
    let t_trace = cs * 1f64.max(kq.sum.norm()).max(norm);
    let t_disc = cs * 1f64.max(kq.disc.norm()).max(norm * norm);

    let sum_real = kq.sum.im.abs() <= t_trace;
    let sum_imag = kq.sum.re.abs() <= t_trace;
    let disc_real = kq.disc.im.abs() <= t_disc;
    let pseudo = sum_real && disc_real;
    let anti = sum_imag && disc_real;

    let diagnostics = Diagnostics {
        trace: kq.sum,
        det: h.det(),
        disc: kq.disc,
        i_disc: kq.i_disc,
        trace_im: kq.sum.im.abs(),
        trace_re: kq.sum.re.abs(),
        disc_im: kq.disc.im.abs(),
        norm,
        threshold_trace: t_trace,
        threshold_disc: t_disc,
    };

    let kind = match (pseudo, anti) {
        (true, true) => HermiticityKind::Both,
        (true, false) => HermiticityKind::PseudoHermitian,
        (false, true) => HermiticityKind::AntiPseudoHermitian,
        (false, false) => return Err(Error::NotClassifiable { diagnostics }),
    };

    let exceptional = kq.disc.norm() <= cs * 1f64.max(norm * norm);
    let positive = kq.disc.re > 0.0;
    let phase = |kind: Kind| {
        if exceptional {
            PhaseKind::Exceptional
        } else if Case::from_kind_phase(kind, true).real_split() == positive {
            PhaseKind::Trivial
        } else {
            PhaseKind::NonTrivial
        }
    };

    let mut case_labels = Vec::new();
    let mut phase_if_pseudo = None;
    let mut phase_if_anti = None;
    for k in [Kind::Pseudo, Kind::Anti] {
        if !kind.admits(k) {
            continue;
        }
        let p = phase(k);
        match k {
            Kind::Pseudo => phase_if_pseudo = Some(p),
            Kind::Anti => phase_if_anti = Some(p),
        }
        if p != PhaseKind::Exceptional {
            case_labels.push(Case::from_kind_phase(k, p == PhaseKind::Trivial));
        }
    }

    Ok(Classification {
        kind,
        phase_if_pseudo,
        phase_if_anti,
        case_labels,
        exceptional,
        diagnostics,
    })
}

/// Verifies that `case` is admitted by `h`.
pub fn check_case(h: &CMat2, case: Case, tol: &Tolerances) -> Result<Classification> {
    let cl = classify(h, tol)?;
    if cl.exceptional {
        return Err(Error::ExceptionalPoint {
            disc_abs: cl.diagnostics.disc.norm(),
        });
    }
    if !cl.admits(case) {
        return Err(Error::CaseMismatch {
            requested: case.to_string(),
        });
    }
    Ok(cl)
}

pub fn is_hermitian(h: &CMat2, tol: &Tolerances) -> bool {
    h.approx_eq(&h.dagger(), tol)
}
