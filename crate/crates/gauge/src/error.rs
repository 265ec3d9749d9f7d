use heisenberg::HeisError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GaugeError {
    #[error(transparent)]
    Heis(#[from] HeisError),
    #[error("cannot combine forms of degree {0} and {1}")]
    Degree(u8, u8),
    #[error("gauge parameter must have modulus one, got {0}")]
    NotUnitary(f64),
    #[error("q must be non-zero")]
    QZero,
    #[error("grade range must be at least 2, got {0}")]
    GradeRange(i64),
}
