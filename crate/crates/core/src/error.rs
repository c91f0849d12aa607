use thiserror::Error;

/// Errors produced by the matrix toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid size {n}: {reason}")]
    InvalidSize { n: usize, reason: &'static str },

    #[error("non-finite entry at index {index}")]
    NonFinite { index: usize },

    #[error("matrix is singular to tolerance (pivot {pivot:e} at step {step})")]
    SingularMatrix { step: usize, pivot: f64 },

    #[error("matrix is not centro-symmetric (deviation {deviation:e})")]
    NotCentroSymmetric { deviation: f64 },

    #[error("matrix is not centro-skew (deviation {deviation:e})")]
    NotCentroSkew { deviation: f64 },

    #[error("eigen-pair residual {residual:e} exceeds bound {bound:e}")]
    ResidualViolation { residual: f64, bound: f64 },

    #[error("matrix has imaginary part {magnitude:e} at ({row}, {col})")]
    ComplexEntries { row: usize, col: usize, magnitude: f64 },

    #[error("sign pattern entry {value} at index {index} is not in {{-1, 0, 1}}")]
    InvalidSignEntry { index: usize, value: i64 },

    #[error("structural identity failed: {0}")]
    IdentityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(expected: impl ToString, found: impl ToString) -> Error {
    Error::DimensionMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}
