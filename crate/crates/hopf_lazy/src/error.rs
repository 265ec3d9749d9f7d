use thiserror::Error;

use crate::Target;

#[derive(Debug, Error)]
pub enum LazyError {
    #[error("cannot convolve {0:?}-valued with {1:?}-valued elements")]
    TargetMismatch(Target, Target),
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("instance carries no {0}")]
    MissingData(&'static str),
    #[error("malformed instance: {0}")]
    Shape(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
