use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no leading term")]
    ZeroPolynomial,
    #[error("non-square minor selection ({rows} rows, {cols} columns)")]
    NonSquare { rows: usize, cols: usize },
    #[error("minor indices must be strictly increasing and positive")]
    BadIndices,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{0} is not an odd prime")]
    NotPrime(u32),
    #[error("degenerate ladder: {0}")]
    Degenerate(String),
    #[error("already linear: every minor size is 1")]
    AlreadyLinear,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("generator is not squarefree")]
    NotSquarefree,
    #[error("Gröbner basis has not been verified")]
    Unverified,
    #[error("invalid ladder: {0}")]
    InvalidLadder(String),
}

pub type Result<T> = std::result::Result<T, Error>;
