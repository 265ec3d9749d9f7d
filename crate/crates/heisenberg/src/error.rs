use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HeisError {
    #[error("grade 0 lives in the torus; use torus multiplication")]
    GradeZero,
    #[error("grid window too small: mass {mass:.3e} would be lost rescaling by {factor}")]
    WindowOverflow { mass: f64, factor: f64 },
    #[error("grid mismatch between operands")]
    GridMismatch,
    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(i64, i64),
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error(transparent)]
    Quad(#[from] quad_field::QuadError),
}
