//! Error types shared across the library.

/// Errors raised by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The numerical data admits no extension of the requested shape.
    #[error("infeasible data: {0}")]
    Feasibility(String),

    /// A dimension formula evaluated to a negative value.
    #[error("negative dimension: {0}")]
    NegativeDimension(String),

    /// The section space is too small to carry a two-plane.
    #[error("empty Grassmannian: {0}")]
    EmptyGrassmannian(String),

    /// The second Chern class lies below every supported window.
    #[error("out of range: {0}")]
    Range(String),

    /// The parameter is a wall; the operation needs a regular value.
    #[error("critical input: {0}")]
    CriticalInput(String),

    /// A randomized generator exhausted its retry budget.
    #[error("generation failed: {0}")]
    Generation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
