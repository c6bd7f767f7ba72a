use thiserror::Error;

use crate::combinatorics::CodeViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters (n={n}, k={k}, r={r}): need 0 <= r <= k <= n and k >= 1")]
    InvalidParameters { n: usize, k: usize, r: usize },

    #[error("{0}")]
    Domain(String),

    #[error("invalid coinversion code: {0}")]
    InvalidCode(CodeViolation),

    #[error("size budget exceeded: {what} requires n <= {limit}, got n = {n}")]
    Budget { what: &'static str, n: usize, limit: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
