use thiserror::Error;

/// Errors raised by the algebra, formula and catalog layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain the operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive sweep would exceed the configured work cap.
    #[error("budget exceeded: {what} needs {needed} blade pairs, cap is {cap}")]
    Budget {
        what: String,
        needed: u128,
        cap: u64,
    },

    /// A value violates a structural invariant (bad blade, duplicate term, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// Malformed text input.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
