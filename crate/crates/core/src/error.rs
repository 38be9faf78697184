use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `|α|² − |β|²` (or `det`) is not 1 within the requested tolerance.
    #[error(
        "not a lossless transfer matrix: determinant deviates from 1 by {deviation:.3e} (tolerance {tolerance:.1e})"
    )]
    DeterminantViolation { deviation: f64, tolerance: f64 },

    #[error("transmission coefficient is zero")]
    ZeroTransmission,

    #[error("matrix is ±identity; every conjugator leaves it unchanged")]
    DegenerateMatrix,

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("circle fit needs three distinct points")]
    DuplicatePoints,

    #[error("evanescent wave in medium {medium} (index {index}, required > {threshold})")]
    EvanescentWave { medium: usize, index: f64, threshold: f64 },

    #[error("invalid stack: {0}")]
    InvalidStack(String),
}
