use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("duplicate interpolation node x = {0}")]
    DuplicateNode(String),
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("exponential requires a series with zero constant term")]
    ExpConstantTerm,
    #[error("coefficient index {index} is beyond truncation order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("the empty chain has no missing-rank count")]
    EmptyChain,
    #[error("chain {chain} is not admissible for m = {m}, n = {n}")]
    ChainNotAdmissible { chain: String, m: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("unbounded input")]
    Unbounded,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("engines disagree: {0}")]
    Disagreement(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
