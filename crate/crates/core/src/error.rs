//! Error types shared across the kernel.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("entry ({row},{col}) is not exactly divisible; remainder {remainder}")]
    NonDivisibleEntry {
        row: usize,
        col: usize,
        remainder: String,
    },

    #[error("invalid theta data: {0}")]
    InvalidTheta(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),
}
