use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a structural invariant (lengths, signs, normalization).
    #[error("validation failed: {0}")]
    Validation(String),

    /// A scalar parameter is out of its admissible range.
    #[error("invalid parameter `{name}`: {reason}")]
    Parameter { name: &'static str, reason: String },

    /// The operation is mathematically undefined on this (otherwise valid) input.
    #[error("domain error: {0}")]
    Domain(String),

    /// Discretized functions do not live on the same quadrature grid.
    #[error("grid mismatch: {0}")]
    Grid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn parameter(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Parameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
