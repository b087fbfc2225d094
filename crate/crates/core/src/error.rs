use thiserror::Error;

use crate::exactq::Rational;

/// Errors raised by the exact q-calculus machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero rational function (or zero polynomial).
    #[error("division by zero")]
    DivisionByZero,

    /// gcd requested for two zero polynomials.
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    /// The reduced denominator vanishes at the evaluation point.
    #[error("pole at q = {at}{}", index.map(|i| format!(" (coefficient of degree {i})")).unwrap_or_default())]
    Pole { at: Rational, index: Option<usize> },

    /// Gaussian elimination found no nonzero pivot in a column.
    #[error("singular system: no nonzero pivot in column {column}")]
    Singular { column: usize },

    /// A result that should hold by construction did not.
    #[error("internal contradiction: {0}")]
    Contradiction(String),

    /// Caller supplied invalid or out-of-range input.
    #[error("usage error: {0}")]
    Usage(String),

    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
