use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("negative weight coordinate at position {0}")]
    NegativeWeight(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("the zero polynomial has no valuation")]
    ZeroPolynomial,
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("polytope is empty")]
    Empty,
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("polytope has non-integral vertices")]
    NonIntegral,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("span has dimension {got}, expected {expected}")]
    DimensionDeficiency { expected: usize, got: usize },
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("element is not in the crystal: {0}")]
    NotInCrystal(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
