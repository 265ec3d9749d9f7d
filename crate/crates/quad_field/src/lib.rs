//! Exact arithmetic for real quadratic irrationalities.
//!
//! Elements of `Q[√Δ]` are stored as pairs of rationals; `√Δ` is never
//! evaluated inside an exact operation. Floating values are only produced
//! on request, with cancellation avoided through the field norm.

mod error;
mod field;
mod irrational;
mod pell;
mod stabilizer;

pub use error::QuadError;
pub use field::FieldElement;
pub use irrational::{classify, QuadraticIrrational};
pub use pell::{fundamental_unit, pell_unit, pell_unit_with_bound, OrderUnit, DEFAULT_SEARCH_BOUND};
pub use stabilizer::{phi, phi_inverse, unit_power_data, QuadContext, StabilizerMatrix, UnitPowerData};

/// Integer square root, `None` unless `n` is a perfect square.
pub fn exact_sqrt(n: &num_bigint::BigInt) -> Option<num_bigint::BigInt> {
    use num_traits::Signed;
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}
