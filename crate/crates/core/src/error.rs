use thiserror::Error;

/// Errors produced by geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("set is empty")]
    Empty,
    #[error("body is not full-dimensional")]
    Degenerate,
    #[error("linear program failed: {0}")]
    Lp(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, GeomError>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(GeomError::DimensionMismatch { expected, found })
    }
}
