use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("vertex {v} is not in 0..{n}")]
    UnknownVertex { v: usize, n: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is not outerplanar; test with is_outerplanar before embedding")]
    NotOuterplanar,
    #[error("modulus {p} is not prime")]
    NotPrime { p: u64 },
    #[error("prime {p} is too small, need p > {min}")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("randomized rank failed verification after {} attempts (seeds {seeds:?})", seeds.len())]
    RetriesExhausted { seeds: Vec<u64> },
    #[error("instance too large for {what}: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("search budget of {budget} nodes exhausted; best lower bound {best_lower_bound}")]
    BudgetExceeded { budget: u64, best_lower_bound: usize },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
