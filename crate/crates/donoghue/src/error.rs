//! Error and warning types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Structured errors for every failure mode of the library.
///
/// Evaluation near poles returns these instead of infinities; callers decide
/// how to continue.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("measure carries no mass (no atoms and no density)")]
    EmptyMeasure,

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("evaluation point {0} lies on the real axis")]
    RealAxisEvaluation(Complex64),

    #[error("Cayley transform pole at {0}")]
    PoleAtCayleyCenter(Complex64),

    #[error("Moebius transform denominator vanished at {0}")]
    MoebiusPole(Complex64),

    #[error("function is not centered: Re f(i) = {0} exceeds tolerance (nonzero shift Q)")]
    NotCentered(f64),

    #[error("function is not Herglotz: Im f(i) = {0} is not positive")]
    NotHerglotz(f64),

    #[error("|U| = {0} is not unimodular within tolerance")]
    NotUnimodular(f64),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("norming constant {0} differs from 1 beyond tolerance")]
    NotDonoghueNormalized(f64),

    #[error("deficiency pairing denominator vanished")]
    DegenerateDeficiencyPairing,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("alpha != 0 is only supported together with a = 1")]
    UnsupportedCombination,

    #[error("closed form degenerates at {0}")]
    DegeneratePoint(Complex64),

    #[error("unknown closed-form identifier: {0}")]
    UnknownClosedForm(String),
}

/// Attached (not raised) when a von Neumann parameter sits close enough to 1
/// that the 1/sqrt(1-kappa^2) factors lose significance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditioningWarning {
    /// The offending value of 1 - kappa^2.
    pub one_minus_kappa_sq: f64,
}

impl ConditioningWarning {
    /// Threshold below which the warning is attached.
    pub const THRESHOLD: f64 = 1e-8;
}
