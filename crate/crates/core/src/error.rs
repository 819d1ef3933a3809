use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("coefficient index {index} exceeds truncation {truncation}; recompute with a larger window")]
    IndexOutOfTruncation { index: usize, truncation: usize },

    #[error("quadratic form is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("quadratic form has dimension 0")]
    EmptyForm,

    #[error("quadratic form is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("quadratic form has odd diagonal entry {value} at position {index}")]
    OddDiagonal { index: usize, value: i64 },

    #[error("quadratic form is not positive definite (leading minor {order} is {minor})")]
    NotPositiveDefinite { order: usize, minor: String },

    #[error("inclusion-exclusion produced a negative count {0} (internal inconsistency)")]
    NegativeCount(String),

    #[error("representation table mismatch: {0}")]
    TableMismatch(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("theta series truncation cannot guarantee cutoff {cutoff:e} (tail bound {tail:e})")]
    NoConvergence { cutoff: f64, tail: f64 },

    #[error("holonomy entries sum to {0}, which is not an integer")]
    SumNotIntegral(String),

    #[error("holonomy vector violates the conjugacy-class region: {0}")]
    OutsideRegion(String),

    #[error("monopole numbers sum to {0}, expected 0")]
    MonopoleSum(i64),

    #[error("dimension mismatch: holonomy has {alpha} entries, monopole vector has {l}")]
    DimensionMismatch { alpha: usize, l: usize },

    #[error("self-intersection must be nonzero")]
    SigmaZero,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
