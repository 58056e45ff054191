//! Crate-wide error type.

/// Errors surfaced by the exact arithmetic layer and the module-level
/// operations built on top of it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Division or inversion with a zero divisor.
    #[error("division by zero")]
    DivisionByZero,
    /// The central charge must be invertible; every specialized computation
    /// divides by it at some point.
    #[error("theta must be nonzero")]
    ZeroTheta,
    /// A denominator vanished at the requested evaluation point.
    #[error("denominator `{factor}` vanishes at the evaluation point")]
    Pole { factor: String },
    /// Malformed textual input (rationals, polynomials, generators, ...).
    #[error("parse error: {0}")]
    Parse(String),
    /// A precondition on an argument was violated.
    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
