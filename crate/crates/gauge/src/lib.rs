//! Gauge theory on the graded Heisenberg algebra `P = ⊕ P_m`.
//!
//! Horizontal forms live in the σ-twisted bimodule: `dτʲ·p = σ(p)·dτʲ`
//! with `σ(p) = ε^{−m}p` on `P_m`, so every form is kept in left normal
//! form `p₁dτ¹ + p₂dτ²` (degree 1) or `p·vol` (degree 2).

mod error;
mod forms;
mod monopole;
mod potential;

pub use error::GaugeError;
pub use forms::HorizontalForm;
pub use monopole::{
    adaptedness_test, q_number, q_number_exact, relative_adaptedness_test, vertical_derivative, AdaptednessReport,
    QCalculus, VerticalCoefficient,
};
pub use potential::{
    apply_potential, curvature_eigenvalue, field_strength, gauge_transform, nabla0, prolong, transform_potential,
    vol_commutator, vol_constant, GaugePotential,
};
