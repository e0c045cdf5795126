use thiserror::Error;

/// Errors for malformed arguments.
///
/// A hypothesis that merely fails to hold is not an error: evaluators report it
/// inside a [`BoundReport`](crate::report::BoundReport) so that sweeps can
/// tabulate applicability.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Input outside the domain an operation is defined on (non-real data,
    /// negative entries, a ratio denominator vanishing on the support, ...).
    #[error("domain violation: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
