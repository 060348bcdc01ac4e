use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("illegal Cartan type {series}{rank}")]
    IllegalCartanType { series: char, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("wrong coordinate basis: expected {expected}, got {got}")]
    WrongBasis { expected: String, got: String },

    #[error("coordinate {0} has a denominator other than 1 or 2")]
    BadDenominator(String),

    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),

    #[error("unknown symmetric pair label `{0}`")]
    UnknownLabel(String),

    #[error("illegal parameters for {label}: {reason}")]
    IllegalParameters { label: String, reason: String },

    #[error("not an FKM foliation: m2 = {m2} is not positive")]
    NotFkm { m2: i64 },

    #[error("split shape mismatch: {0}")]
    SplitShape(String),

    #[error("outside the supported scope: multiplicities ({m1},{m2}) have m1 > m2")]
    OutOfScope { m1: i64, m2: i64 },

    #[error("point {0} is not admissible")]
    NotAdmissible(String),

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
