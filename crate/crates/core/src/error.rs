use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("node {node} out of range for graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("graph has {n} nodes, dense limit is {limit}")]
    DenseLimitExceeded { n: usize, limit: usize },

    #[error("graph has {n} nodes, exhaustive enumeration limit is {limit}")]
    EnumerationLimitExceeded { n: usize, limit: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
