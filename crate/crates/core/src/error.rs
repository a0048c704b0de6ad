use thiserror::Error;

/// Errors raised by group construction, search and the verification harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by zero in finite field")]
    DivisionByZero,
    #[error("capacity exceeded: {what} = {value} (limit {limit})")]
    Capacity { what: String, value: u64, limit: u64 },
    /// A claim was invoked with parameters outside its stated domain.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A hypothesis of a checked statement does not hold on the given instance.
    #[error("hypothesis failed for {claim}: {hypothesis}")]
    Hypothesis { claim: String, hypothesis: String },
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn capacity(what: impl Into<String>, value: u64, limit: u64) -> Self {
        Error::Capacity {
            what: what.into(),
            value,
            limit,
        }
    }

    pub(crate) fn hypothesis(claim: &str, hypothesis: impl Into<String>) -> Self {
        Error::Hypothesis {
            claim: claim.to_string(),
            hypothesis: hypothesis.into(),
        }
    }
}
