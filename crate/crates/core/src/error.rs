//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation images {images:?}: {reason}")]
    InvalidPermutation { images: Vec<usize>, reason: String },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("invalid partition parts {0:?}: parts must be positive and nonincreasing")]
    InvalidPartition(Vec<usize>),

    #[error("negative weight {0} (only nonnegative group-algebra elements are supported)")]
    NegativeWeight(f64),

    #[error(
        "group algebra element is not symmetric: weight({0}) differs from weight of its inverse"
    )]
    NotSymmetric(String),

    #[error("generating set is not closed under inversion: {0} present without its inverse")]
    NotInversionClosed(String),

    #[error("matrix is not symmetric: max |M - M^T| entry is {0:e}")]
    AsymmetricMatrix(f64),

    #[error("matrix is not square: {0} x {1}")]
    NotSquare(usize, usize),

    #[error("degree {n} exceeds {what} cap {cap} (pass an explicit cap to override)")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
