//! Crate-wide error type.
//!
//! Variants map onto the CLI exit codes: input/parse problems exit 1,
//! resource-cap errors exit 2, exhausted search budgets exit 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("grade overflow: grades {j} + {k} exceed ambient dimension {n}")]
    GradeOverflow { j: usize, k: usize, n: usize },

    #[error("linearly dependent vectors: {0}")]
    DependentVectors(String),

    #[error("resource cap of {cap} exceeded while {what}")]
    ResourceCap { cap: u64, what: String },

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
