use thiserror::Error;

use crate::classifier::Diagnostics;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("matrix is singular (|det| = {det:e}, threshold {threshold:e})")]
    SingularMatrix { det: f64, threshold: f64 },

    #[error("matrix is neither pseudo-Hermitian nor anti-pseudo-Hermitian")]
    NotClassifiable { diagnostics: Diagnostics },

    #[error("{requested} is not admitted by this matrix")]
    CaseMismatch { requested: String },

    #[error("exceptional point: tr(H)^2 - 4 det(H) = {disc_abs:e} is within threshold")]
    ExceptionalPoint { disc_abs: f64 },

    #[error("eigenbasis frame is degenerate for both branches")]
    DegenerateFrame,

    #[error("perpendicular vector is not orthonormal to n (residual {residual:e})")]
    InvalidPerpVector { residual: f64 },

    #[error("normalization ratio is degenerate: {which} vanishes while Im(phi) != 0")]
    DegenerateNormalizationRatio { which: &'static str },

    #[error("Im(tau) = {im} is not an integer multiple of pi")]
    InvalidImaginaryPart { im: f64 },

    #[error("unknown name: {0}")]
    NotFound(String),

    #[error("normalization must be finite and invertible, got |N1| = {n1}, |N2| = {n2}")]
    InvalidNormalization { n1: f64, n2: f64 },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("frame is not self-conjugate (residual {residual:e}); shortcut form does not apply")]
    FrameNotSelfConjugate { residual: f64 },

    #[error("kind required: {0}")]
    KindRequired(String),
}

impl Error {
    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::NotClassifiable { .. } => "NotClassifiable",
            Error::CaseMismatch { .. } => "CaseMismatch",
            Error::ExceptionalPoint { .. } => "ExceptionalPoint",
            Error::DegenerateFrame => "DegenerateFrame",
            Error::InvalidPerpVector { .. } => "InvalidPerpVector",
            Error::DegenerateNormalizationRatio { .. } => "DegenerateNormalizationRatio",
            Error::InvalidImaginaryPart { .. } => "InvalidImaginaryPart",
            Error::NotFound(_) => "NotFound",
            Error::InvalidNormalization { .. } => "InvalidNormalization",
            Error::InvalidParameter { .. } => "InvalidParameter",
            Error::FrameNotSelfConjugate { .. } => "FrameNotSelfConjugate",
            Error::KindRequired(_) => "KindRequired",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
