//! Canonical calculus on `A_θ`.
//!
//! A one-form is stored as a pair `(b₁, b₂)` standing for `i(b₁dτ¹ + b₂dτ²)`,
//! so that `d_B(b) = (δ₁b, δ₂b)` and `dτ¹ = (−i, 0)`, `dτ² = (0, −i)`. The
//! generators `dτʲ` are central and skew-adjoint, hence `idτʲ` is
//! self-adjoint and the star acts coefficientwise. Two-forms are multiples
//! of the central self-adjoint `vol_B = dτ¹∧dτ²`.

use num_complex::Complex64;

use crate::{Axis, TorusElement};

#[derive(Debug, Clone, PartialEq)]
pub struct OneFormB {
    pub b1: TorusElement,
    pub b2: TorusElement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoFormB {
    pub b: TorusElement,
}

impl OneFormB {
    pub fn star(&self) -> Self {
        OneFormB { b1: self.b1.star(), b2: self.b2.star() }
    }

    pub fn left_mul(&self, x: &TorusElement) -> Self {
        OneFormB { b1: x * &self.b1, b2: x * &self.b2 }
    }

    pub fn right_mul(&self, x: &TorusElement) -> Self {
        OneFormB { b1: &self.b1 * x, b2: &self.b2 * x }
    }

    pub fn distance(&self, o: &Self) -> f64 {
        self.b1.distance(&o.b1).max(self.b2.distance(&o.b2))
    }
}

impl TwoFormB {
    pub fn star(&self) -> Self {
        TwoFormB { b: self.b.star() }
    }

    pub fn distance(&self, o: &Self) -> f64 {
        self.b.distance(&o.b)
    }
}

pub fn dtau1(theta: f64) -> OneFormB {
    OneFormB {
        b1: TorusElement::one(theta).scale(Complex64::new(0.0, -1.0)),
        b2: TorusElement::zero(theta),
    }
}

pub fn dtau2(theta: f64) -> OneFormB {
    OneFormB {
        b1: TorusElement::zero(theta),
        b2: TorusElement::one(theta).scale(Complex64::new(0.0, -1.0)),
    }
}

pub fn vol(theta: f64) -> TwoFormB {
    TwoFormB { b: TorusElement::one(theta) }
}

pub fn d_b(x: &TorusElement) -> OneFormB {
    OneFormB { b1: x.delta(Axis::One), b2: x.delta(Axis::Two) }
}

pub fn d_b1(w: &OneFormB) -> TwoFormB {
    TwoFormB { b: &w.b1.delta(Axis::Two) - &w.b2.delta(Axis::One) }
}

/// `(b₁,b₂) ∧ (c₁,c₂) = b₂c₁ − b₁c₂`.
pub fn wedge(w: &OneFormB, w2: &OneFormB) -> TwoFormB {
    TwoFormB { b: &(&w.b2 * &w2.b1) - &(&w.b1 * &w2.b2) }
}
