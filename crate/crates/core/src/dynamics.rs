use serde::{Deserialize, Serialize};

use crate::classifier::classify;
use crate::diagonalizer::{eigenbasis, Branch};
use crate::error::{Error, Result};
use crate::mat::{CMat2, C64, I};
use crate::tol::Tolerances;

pub type StateVec2 = [C64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvolutionReport {
    pub times: Vec<f64>,
    pub values: Vec<C64>,
    pub max_drift: f64,
}

/// `exp(-i H t)` through the spectral decomposition `X^-1 diag(e^{-i E t}) X`.
pub fn propagator(h: &CMat2, t: f64, tol: &Tolerances) -> Result<CMat2> {
    let cl = classify(h, tol)?;
    if cl.exceptional {
        return Err(Error::ExceptionalPoint {
            disc_abs: cl.diagnostics.disc.norm(),
        });
    }
    // every admitted case diagonalizes H
    let case = cl.case_labels[0];
    let es = eigenbasis(h, case, Branch::Plus, tol)?;
    let d = CMat2::diag((-I * es.e1 * t).exp(), (-I * es.e2 * t).exp());
    Ok(es.xinv * d * es.x)
}

pub fn evolve(h: &CMat2, psi0: StateVec2, t: f64, tol: &Tolerances) -> Result<StateVec2> {
    Ok(propagator(h, t, tol)?.apply(psi0))
}

/// `<psi| A |psi>` with the conjugate-linear left slot.
pub fn expectation(a: &CMat2, psi: StateVec2) -> C64 {
    let v = a.apply(psi);
    psi[0].conj() * v[0] + psi[1].conj() * v[1]
}

/// Samples `<psi(t)| eta B |psi(t)>` over `times`.
pub fn stationarity_check(
    h: &CMat2,
    eta: &CMat2,
    b: &CMat2,
    psi0: StateVec2,
    times: &[f64],
    tol: &Tolerances,
) -> Result<EvolutionReport> {
    if times.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidParameter {
            name: "times",
            reason: "must be strictly increasing".into(),
        });
    }
    let a = *eta * *b;
    let values = times
        .iter()
        .map(|&t| evolve(h, psi0, t, tol).map(|psi| expectation(&a, psi)))
        .collect::<Result<Vec<_>>>()?;
    let max_drift = values
        .first()
        .map(|v0| values.iter().map(|v| (v - v0).norm()).fold(0.0, f64::max))
        .unwrap_or(0.0);
    Ok(EvolutionReport {
        times: times.to_vec(),
        values,
        max_drift,
    })
}

/// Uniform grid of `n` points on `[t0, t1]`.
pub fn time_grid(t0: f64, t1: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![t0],
        _ => (0..n).map(|k| t0 + (t1 - t0) * k as f64 / (n - 1) as f64).collect(),
    }
}
