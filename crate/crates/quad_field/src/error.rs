use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("not a quadratic irrationality: {0}")]
    NonQuadratic(String),
    #[error("invalid discriminant {0}: must be a positive non-square congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(String),
    #[error("Pell search exhausted at v = {0}")]
    SearchExhausted(u64),
    #[error("matrix entries not integral: {0}")]
    NonIntegral(String),
    #[error("matrix does not stabilize theta")]
    NotStabilizer,
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(String, String),
    #[error("division by zero in the quadratic field")]
    DivisionByZero,
}
