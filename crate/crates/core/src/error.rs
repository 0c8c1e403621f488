use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("ambient dimension must be at least 2, found {0}")]
    AmbientTooSmall(usize),

    #[error("degenerate segment: endpoints coincide at {0}")]
    DegenerateSegment(String),

    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    Shape {
        rows: usize,
        row: usize,
        cols: usize,
    },

    #[error("point {0} is not in the tropical convex hull")]
    NotInHull(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("rational map is nowhere defined: some kernel is the full space")]
    UndefinedMap,

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
