//! Metric operators for diagonalizable 2x2 pseudo-Hermitian and
//! anti-pseudo-Hermitian Hamiltonians, plus a 4x4 Fermionic oscillator.

pub mod catalog;
pub mod classifier;
pub mod diagonalizer;
pub mod dynamics;
pub mod error;
pub mod involution;
pub mod leewick;
pub mod mat;
pub mod metric;
pub mod pauli;
pub mod sweep;
pub mod tol;

pub use classifier::{classify, Case, Classification, HermiticityKind, Kind, PhaseKind};
pub use diagonalizer::{eigenbasis, Branch, CircleSign, EigenSystem};
pub use error::{Error, Result};
pub use mat::{CMat2, CMat4, C64};
pub use metric::{metric_general, MetricResult, Normalization, PhaseVector, Q};
pub use tol::Tolerances;
