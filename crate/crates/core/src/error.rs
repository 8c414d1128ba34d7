use thiserror::Error;

/// Errors raised by evaluators, verifiers and the exact-arithmetic checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("{op}: root {index} did not converge within {iterations} Newton steps")]
    NoConvergence {
        op: &'static str,
        index: usize,
        iterations: usize,
    },

    #[error("grid validation failed: {}", .0.join("; "))]
    GridValidation(Vec<String>),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain {
        op,
        reason: reason.into(),
    }
}
