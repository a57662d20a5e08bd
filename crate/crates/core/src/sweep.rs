use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::catalog::{build, schema};
use crate::classifier::{classify, Case};
use crate::diagonalizer::{eigenvalues, Branch, CircleSign};
use crate::error::{Error, Result};
use crate::mat::{c, C64};
use crate::metric::{metric_for_case, Normalization, PhaseVector};
use crate::tol::Tolerances;

pub const MAX_POINTS: usize = 1_000_000;

/// `points` evenly spaced values on `[start, stop]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl Axis {
    pub fn value(&self, k: usize) -> f64 {
        if self.points <= 1 {
            self.start
        } else {
            self.start + (self.stop - self.start) * k as f64 / (self.points - 1) as f64
        }
    }
}

/// `name=start:stop:points`
impl FromStr for Axis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidParameter {
            name: "grid",
            reason: format!("{reason} in {s:?}, expected name=start:stop:points"),
        };
        let (name, range) = s.split_once('=').ok_or_else(|| bad("missing '='"))?;
        let parts: Vec<&str> = range.split(':').collect();
        let [a, b, n] = parts.as_slice() else {
            return Err(bad("need three ':'-separated fields"));
        };
        let start: f64 = a.trim().parse().map_err(|_| bad("bad start"))?;
        let stop: f64 = b.trim().parse().map_err(|_| bad("bad stop"))?;
        let points: usize = n.trim().parse().map_err(|_| bad("bad point count"))?;
        if !start.is_finite() || !stop.is_finite() {
            return Err(bad("non-finite bound"));
        }
        Ok(Axis {
            name: name.trim().to_string(),
            start,
            stop,
            points,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub entry: String,
    /// Parameters held fixed; absent ones take schema defaults.
    pub fixed: BTreeMap<String, C64>,
    /// Lexicographic order, first axis slowest.
    pub axes: Vec<Axis>,
    pub normalization: Normalization,
    pub phase: PhaseVector,
    pub branch: Branch,
    pub circle: CircleSign,
}

impl SweepSpec {
    pub fn new(entry: &str, fixed: BTreeMap<String, C64>, axes: Vec<Axis>) -> Self {
        SweepSpec {
            entry: entry.to_string(),
            fixed,
            axes,
            normalization: Normalization::unit(),
            phase: PhaseVector::real(0.0),
            branch: Branch::Plus,
            circle: CircleSign::Plus,
        }
    }

    /// Checks names and grid size, returning the number of points.
    pub fn validate(&self) -> Result<usize> {
        let sch = schema(&self.entry)?;
        if self.entry == "lee-wick" {
            return Err(Error::InvalidParameter {
                name: "entry",
                reason: "lee-wick has no 2x2 sweep".into(),
            });
        }
        for ax in &self.axes {
            if !sch.params.iter().any(|p| p.name == ax.name) {
                return Err(Error::NotFound(format!("parameter {} of {}", ax.name, self.entry)));
            }
            if self.fixed.contains_key(&ax.name) {
                return Err(Error::InvalidParameter {
                    name: "grid",
                    reason: format!("{} is both fixed and swept", ax.name),
                });
            }
        }
        let mut names: Vec<&str> = self.axes.iter().map(|a| a.name.as_str()).collect();
        names.sort_unstable();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter {
                name: "grid",
                reason: "axis listed twice".into(),
            });
        }
        self.axes
            .iter()
            .try_fold(1usize, |acc, a| acc.checked_mul(a.points))
            .filter(|&n| n <= MAX_POINTS)
            .ok_or_else(|| Error::InvalidParameter {
                name: "grid",
                reason: format!("more than {MAX_POINTS} points"),
            })
    }

    pub fn point(&self, mut k: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.axes.len()];
        for (i, ax) in self.axes.iter().enumerate().rev() {
            out[i] = ax.value(k % ax.points.max(1));
            k /= ax.points.max(1);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub params: Vec<f64>,
    /// Empty when `H` is not classifiable or sits on an exceptional point.
    pub cases: Vec<Case>,
    pub exceptional: bool,
    /// `tr(H)^2 - 4 det(H)`
    pub disc: C64,
    pub eigenvalues: Option<(C64, C64)>,
    /// Sign of `Re det eta` for the first admitted case.
    pub det_eta_sign: Option<f64>,
    /// Smallest eigenvalue of `eta` when it is Hermitian.
    pub eta_min_eigenvalue: Option<f64>,
    pub residual: Option<f64>,
    /// Relative distance between the closed-form catalog metric and the general one.
    pub oracle_residual: Option<f64>,
}

/// Evaluates grid point `k`. Parameter errors abort; classification failures give a sparse row.
pub fn sweep_point(spec: &SweepSpec, k: usize, tol: &Tolerances) -> Result<SweepRow> {
    let params = spec.point(k);
    let mut values = spec.fixed.clone();
    for (ax, x) in spec.axes.iter().zip(&params) {
        values.insert(ax.name.clone(), c(*x, 0.0));
    }
    let entry = build(&spec.entry, &values, tol)?;
    let h = entry.hamiltonian;
    let mut row = SweepRow {
        params,
        cases: vec![],
        exceptional: false,
        disc: h.trace() * h.trace() - h.det() * 4.0,
        eigenvalues: None,
        det_eta_sign: None,
        eta_min_eigenvalue: None,
        residual: None,
        oracle_residual: None,
    };
    let cl = match classify(&h, tol) {
        Ok(cl) => cl,
        Err(Error::NotClassifiable { .. }) => return Ok(row),
        Err(e) => return Err(e),
    };
    row.exceptional = cl.exceptional;
    if cl.exceptional {
        return Ok(row);
    }
    row.cases = cl.case_labels.clone();
    let case = cl.case_labels[0];
    let (n, pv) = (&spec.normalization, &spec.phase);
    row.eigenvalues = Some(eigenvalues(&h, case, spec.branch, tol)?);
    let m = metric_for_case(&h, n, pv, case, spec.branch, spec.circle, tol)?;
    row.det_eta_sign = Some(m.eta.det().re.signum());
    if m.hermitian {
        row.eta_min_eigenvalue = Some(m.eta.hermitian_eigenvalues()[0]);
    }
    row.residual = Some(m.residual);
    if entry.predicted_cases().contains(&case) {
        let o = entry.oracle_metric(case, n, pv, spec.branch, spec.circle, tol)?;
        row.oracle_residual = Some(o.eta.rel_diff(&m.eta));
    }
    Ok(row)
}

/// Serial sweep over the whole grid.
pub fn sweep(spec: &SweepSpec, tol: &Tolerances) -> Result<Vec<SweepRow>> {
    let n = spec.validate()?;
    (0..n).map(|k| sweep_point(spec, k, tol)).collect()
}
