//! Basic Heisenberg modules `P_m = E(Φ(ε^m), θ)` over a real-multiplication
//! noncommutative torus, sampled on a uniform grid per sector.
//!
//! With `(a,b;c,d) = Φ(ε^m)` and sectors `k ∈ Z_{|c|}` the module actions are
//!
//! ```text
//! (f·U)(x,k) = e(x − kd/c) f(x,k)        (U·f)(x,k) = e(x/ε^m − k/c) f(x,k)
//! (f·V)(x,k) = f(x − ε^m/c, k − 1)       (V·f)(x,k) = f(x − 1/c, k − a)
//! ```
//!
//! and the graded product, star, σ-twist and the derivations `∂₁ = −i d/dx`,
//! `∂₂ = 2πε^{−m}c_m x` assemble `P = ⊕ P_m` into a Z-graded *-algebra.

mod element;
mod error;
mod frame;
mod graded;
mod grid;
pub mod packets;
mod product;

pub use element::{Generator, HeisenbergElement};
pub use error::HeisError;
pub use frame::{Frame, GradeData};
pub use graded::{GradedElement, Part};
pub use grid::{derivative, GridSpec, Spline};
pub use product::Diagnostics;
