use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric (entry ({row}, {col}) differs from its transpose)")]
    Asymmetric { row: usize, col: usize },

    #[error("matrix dimensions must be positive and rows of equal length")]
    BadShape,

    #[error("duplicate basis monomial {0}")]
    DuplicateMonomial(String),

    #[error("exact division failed: {0}")]
    NotDivisible(String),

    #[error("arity must be positive")]
    ZeroArity,

    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
