use std::sync::Arc;

use heisenberg::{Frame, GradedElement};
use num_complex::Complex64;

use crate::GaugeError;

/// Horizontal form in left normal form.
#[derive(Debug, Clone)]
pub enum HorizontalForm {
    Zero(GradedElement),
    /// `p₁·dτ¹ + p₂·dτ²`
    One(GradedElement, GradedElement),
    /// `p·vol`
    Two(GradedElement),
}

fn sigma_pow(p: &GradedElement, k: u8) -> GradedElement {
    (0..k).fold(p.clone(), |acc, _| acc.sigma())
}

impl HorizontalForm {
    pub fn degree(&self) -> u8 {
        match self {
            HorizontalForm::Zero(_) => 0,
            HorizontalForm::One(..) => 1,
            HorizontalForm::Two(_) => 2,
        }
    }

    /// `c₁dτ¹ + c₂dτ²` with scalar coefficients.
    pub fn constant_one(frame: &Arc<Frame>, c1: Complex64, c2: Complex64) -> Self {
        let one = GradedElement::one(frame);
        HorizontalForm::One(one.scale(c1), one.scale(c2))
    }

    pub fn dtau1(frame: &Arc<Frame>) -> Self {
        Self::constant_one(frame, Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn dtau2(frame: &Arc<Frame>) -> Self {
        Self::constant_one(frame, Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    pub fn vol(frame: &Arc<Frame>) -> Self {
        HorizontalForm::Two(GradedElement::one(frame))
    }

    pub fn map(&self, f: impl Fn(&GradedElement) -> GradedElement) -> Self {
        match self {
            HorizontalForm::Zero(p) => HorizontalForm::Zero(f(p)),
            HorizontalForm::One(a, b) => HorizontalForm::One(f(a), f(b)),
            HorizontalForm::Two(p) => HorizontalForm::Two(f(p)),
        }
    }

    fn try_map(&self, f: impl Fn(&GradedElement) -> Result<GradedElement, GaugeError>) -> Result<Self, GaugeError> {
        Ok(match self {
            HorizontalForm::Zero(p) => HorizontalForm::Zero(f(p)?),
            HorizontalForm::One(a, b) => HorizontalForm::One(f(a)?, f(b)?),
            HorizontalForm::Two(p) => HorizontalForm::Two(f(p)?),
        })
    }

    fn components(&self) -> Vec<&GradedElement> {
        match self {
            HorizontalForm::Zero(p) | HorizontalForm::Two(p) => vec![p],
            HorizontalForm::One(a, b) => vec![a, b],
        }
    }

    fn zip(&self, o: &Self, f: impl Fn(&GradedElement, &GradedElement) -> Result<GradedElement, GaugeError>) -> Result<Self, GaugeError> {
        Ok(match (self, o) {
            (HorizontalForm::Zero(a), HorizontalForm::Zero(b)) => HorizontalForm::Zero(f(a, b)?),
            (HorizontalForm::One(a1, a2), HorizontalForm::One(b1, b2)) => HorizontalForm::One(f(a1, b1)?, f(a2, b2)?),
            (HorizontalForm::Two(a), HorizontalForm::Two(b)) => HorizontalForm::Two(f(a, b)?),
            _ => return Err(GaugeError::Degree(self.degree(), o.degree())),
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self, GaugeError> {
        self.zip(o, |a, b| Ok(a.add(b)?))
    }

    pub fn sub(&self, o: &Self) -> Result<Self, GaugeError> {
        self.zip(o, |a, b| Ok(a.sub(b)?))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|p| p.scale(c))
    }

    /// `p·ω`.
    pub fn left_mul(&self, p: &GradedElement) -> Result<Self, GaugeError> {
        self.try_map(|a| Ok(p.mul(a)?))
    }

    /// `ω·q`; moving `q` past the generators applies `σ^{deg ω}`.
    pub fn right_mul(&self, q: &GradedElement) -> Result<Self, GaugeError> {
        let tq = sigma_pow(q, self.degree());
        self.try_map(|a| Ok(a.mul(&tq)?))
    }

    /// Wedge product; only total degree ≤ 2 is non-zero.
    pub fn wedge(&self, o: &Self) -> Result<Self, GaugeError> {
        match (self, o) {
            (HorizontalForm::Zero(p), _) => o.left_mul(p),
            (_, HorizontalForm::Zero(q)) => self.right_mul(q),
            (HorizontalForm::One(p1, p2), HorizontalForm::One(q1, q2)) => {
                let a = p1.mul(&q2.sigma())?;
                let b = p2.mul(&q1.sigma())?;
                Ok(HorizontalForm::Two(a.sub(&b)?))
            }
            _ => Err(GaugeError::Degree(self.degree(), o.degree())),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.components().iter().map(|p| p.max_abs()).fold(0.0, f64::max)
    }

    pub fn distance(&self, o: &Self) -> Result<f64, GaugeError> {
        Ok(self.sub(o)?.max_abs())
    }

    pub fn rel_distance(&self, o: &Self) -> Result<f64, GaugeError> {
        let s = self.max_abs().max(o.max_abs()).max(f64::MIN_POSITIVE);
        Ok(self.distance(o)? / s)
    }
}
