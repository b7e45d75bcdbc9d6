use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("partitions of different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("column stabilizer is only defined for ordinary tableaux")]
    ModeMismatch,
    #[error("malformed order: {0}")]
    MalformedOrder(String),
    #[error("shape has {rows} rows but the superspace only has n = {n}")]
    ShapeTooTall { rows: usize, n: usize },
    #[error("inconsistent weight: {0}")]
    InconsistentWeight(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
