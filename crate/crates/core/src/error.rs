use thiserror::Error;

use crate::blowup::Classification;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("chart mismatch: {0}")]
    ChartMismatch(String),

    #[error("empty coordinate name")]
    EmptyCoordinate,

    #[error("duplicate coordinate `{0}`")]
    DuplicateCoordinate(String),

    #[error("coordinate `{0}` already exists in the chart")]
    CoordinateCollision(String),

    #[error("{0} must be positive")]
    ZeroNotAllowed(&'static str),

    #[error("blowup center is empty")]
    EmptyCenter,

    #[error("blowup center index {index} out of range for dimension {dim}")]
    CenterOutOfRange { index: usize, dim: usize },

    #[error("blowup center index {0} repeated")]
    DuplicateCenterIndex(usize),

    #[error("blowup center is not valid: {0}")]
    InvalidBlowup(Classification),

    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),

    #[error("expected a curve (1-dimensional chart), found dimension {0}")]
    NotACurve(usize),

    #[error("arithmetic overflow")]
    Overflow,
}
