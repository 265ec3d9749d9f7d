//! The smooth noncommutative torus `A_θ`, truncated to finite Laurent sums.
//!
//! Elements are stored in normal order: every `U` power to the left of every
//! `V` power. From `VU = e(θ)UV`, with `e(t) = exp(2πit)`, one gets
//!
//! ```text
//! (UᵃVᵇ)(UᶜVᵈ) = e(θbc) Uᵃ⁺ᶜVᵇ⁺ᵈ
//! (UᵃVᵇ)*      = V⁻ᵇU⁻ᵃ = e(θab) U⁻ᵃV⁻ᵇ
//! ```
//!
//! Phases are evaluated in double precision from the exact integer exponent;
//! the reduction `θk mod 1` loses about `|k|·2⁻⁵³` in absolute terms.

mod calculus;
mod element;

pub use calculus::{d_b, d_b1, dtau1, dtau2, vol, wedge, OneFormB, TwoFormB};
pub use element::{phase, Axis, TorusElement, TorusError};
