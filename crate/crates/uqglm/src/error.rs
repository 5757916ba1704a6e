//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the engine.
///
/// Parameter coincidences are hard errors everywhere: a pole of one of the
/// elementary rational functions invalidates every formula built on top of
/// it, so nothing is ever evaluated "at infinity".
#[derive(Debug, Error)]
pub enum Error {
    /// Two spectral parameters coincide where a rational function has a pole.
    #[error("pole: {context} evaluated at coinciding arguments")]
    Pole { context: &'static str },

    /// A deformation parameter with q = 0 or q^2 = 1 was requested.
    #[error("invalid deformation parameter: q must satisfy q != 0 and q^2 != 1")]
    InvalidQ,

    /// Zero cannot be inverted (needed for parameter inversion maps).
    #[error("cannot invert zero parameter")]
    ZeroParameter,

    /// Model or parameter-set validation failed.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// Per-color cardinalities of two parameter families disagree.
    #[error("cardinality mismatch: {0}")]
    Cardinality(String),

    /// Text could not be parsed as a scalar / config / parameter set.
    #[error("parse error: {0}")]
    Parse(String),

    /// Exact linear system was singular where a unique solution was required.
    #[error("singular linear system: {0}")]
    Singular(String),

    /// Rational-function reconstruction could not be completed.
    #[error("reconstruction failed: {0}")]
    Reconstruction(String),

    /// Iterative solver did not reach the requested tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
