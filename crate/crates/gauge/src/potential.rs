use std::f64::consts::PI;
use std::sync::Arc;

use heisenberg::{Frame, GradedElement};
use nc_torus::Axis;
use num_complex::Complex64;
use quad_field::QuadContext;

use crate::{GaugeError, HorizontalForm};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `∇ = ∇₀ + [i(s₁dτ¹ + s₂dτ²), ·]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GaugePotential {
    pub s1: f64,
    pub s2: f64,
}

impl GaugePotential {
    pub fn new(s1: f64, s2: f64) -> Self {
        GaugePotential { s1, s2 }
    }

    /// The form `i(s₁dτ¹ + s₂dτ²)`.
    pub fn form(&self, frame: &Arc<Frame>) -> HorizontalForm {
        HorizontalForm::constant_one(frame, I * self.s1, I * self.s2)
    }
}

/// `∇₀(p) = i∂₁(p)dτ¹ + i∂₂(p)dτ²`.
pub fn nabla0(p: &GradedElement) -> HorizontalForm {
    HorizontalForm::One(p.partial(Axis::One).scale(I), p.partial(Axis::Two).scale(I))
}

pub fn apply_potential(pot: &GaugePotential, p: &GradedElement) -> Result<HorizontalForm, GaugeError> {
    let a = pot.form(&p.frame);
    let comm = a.right_mul(p)?.sub(&a.left_mul(p)?)?;
    nabla0(p).add(&comm)
}

/// Prolongation of `∇` to one-forms: `∇₀(pⱼ)∧dτʲ` plus the graded commutator with the potential form.
pub fn prolong(pot: &GaugePotential, w: &HorizontalForm) -> Result<HorizontalForm, GaugeError> {
    let HorizontalForm::One(p1, p2) = w else {
        return Err(GaugeError::Degree(w.degree(), 1));
    };
    let fr = &p1.frame;
    let flat = nabla0(p1)
        .wedge(&HorizontalForm::dtau1(fr))?
        .add(&nabla0(p2).wedge(&HorizontalForm::dtau2(fr))?)?;
    let a = pot.form(fr);
    flat.add(&a.wedge(w)?)?.add(&w.wedge(&a)?)
}

/// `F[∇](p) = −i∇′(∇(p))`, a degree-2 form.
pub fn field_strength(pot: &GaugePotential, p: &GradedElement) -> Result<HorizontalForm, GaugeError> {
    Ok(prolong(pot, &apply_potential(pot, p)?)?.scale(-I))
}

/// `[c·vol, p]` in the twisted bimodule.
pub fn vol_commutator(c: f64, p: &GradedElement) -> Result<HorizontalForm, GaugeError> {
    let v = HorizontalForm::vol(&p.frame).scale(Complex64::new(c, 0.0));
    v.right_mul(p)?.sub(&v.left_mul(p)?)
}

/// `2πεc₁/(ε²−1)`.
pub fn vol_constant(q: &QuadContext) -> f64 {
    let e = q.eps_f64;
    2.0 * PI * e * q.power(1).c_i64() as f64 / (e * e - 1.0)
}

/// Closed form of the field-strength eigenvalue on `P_m`: `2πε^{−m}c_m`.
pub fn curvature_eigenvalue(q: &QuadContext, m: i64) -> f64 {
    2.0 * PI * (&q.eps_pow(-m) * &q.c(m)).to_f64()
}

/// `ψ_G(ζ)`: multiplies the grade-m part by `ζ^m`.
pub fn gauge_transform(zeta: Complex64, p: &GradedElement) -> Result<GradedElement, GaugeError> {
    if (zeta.norm() - 1.0).abs() > 1e-12 {
        return Err(GaugeError::NotUnitary(zeta.norm()));
    }
    Ok(p.scale_by_grade(|m| zeta.powi(m as i32)))
}

/// `(ψ_G(ζ)▷∇)(p) = ψ_G(ζ)(∇(ψ_G(ζ)⁻¹ p))`, the transform acting on coefficients.
pub fn transform_potential(zeta: Complex64, pot: &GaugePotential, p: &GradedElement) -> Result<HorizontalForm, GaugeError> {
    let back = gauge_transform(zeta.conj(), p)?;
    let w = apply_potential(pot, &back)?;
    Ok(w.map(|c| c.scale_by_grade(|m| zeta.powi(m as i32))))
}
