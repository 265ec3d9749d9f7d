use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TorusError {
    #[error("theta mismatch: {0} vs {1}")]
    ThetaMismatch(f64, f64),
    #[error("malformed torus element: {0}")]
    Malformed(String),
}

/// Index of one of the two commuting derivations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    One,
    Two,
}

/// `e(θk) = exp(2πiθk)` for integer `k`, reducing `θk` mod 1 first.
pub fn phase(theta: f64, k: i64) -> Complex64 {
    let t = (theta * k as f64).rem_euclid(1.0);
    Complex64::from_polar(1.0, 2.0 * PI * t)
}

/// Finite sum `Σ a_{mn} UᵐVⁿ`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusElement {
    pub theta: f64,
    pub coeffs: BTreeMap<(i64, i64), Complex64>,
}

impl TorusElement {
    pub fn zero(theta: f64) -> Self {
        TorusElement { theta, coeffs: BTreeMap::new() }
    }

    pub fn monomial(theta: f64, m: i64, n: i64, c: Complex64) -> Self {
        let mut x = Self::zero(theta);
        x.coeffs.insert((m, n), c);
        x
    }

    pub fn one(theta: f64) -> Self {
        Self::monomial(theta, 0, 0, Complex64::new(1.0, 0.0))
    }

    pub fn u(theta: f64) -> Self {
        Self::monomial(theta, 1, 0, Complex64::new(1.0, 0.0))
    }

    pub fn v(theta: f64) -> Self {
        Self::monomial(theta, 0, 1, Complex64::new(1.0, 0.0))
    }

    pub fn from_terms(theta: f64, terms: &[(i64, i64, Complex64)]) -> Self {
        let mut x = Self::zero(theta);
        for &(m, n, c) in terms {
            *x.coeffs.entry((m, n)).or_default() += c;
        }
        x
    }

    pub fn coeff(&self, m: i64, n: i64) -> Complex64 {
        self.coeffs.get(&(m, n)).copied().unwrap_or_default()
    }

    fn check(&self, o: &Self) -> Result<(), TorusError> {
        if self.theta.to_bits() == o.theta.to_bits() {
            Ok(())
        } else {
            Err(TorusError::ThetaMismatch(self.theta, o.theta))
        }
    }

    pub fn multiply(&self, o: &Self) -> Result<Self, TorusError> {
        self.check(o)?;
        let mut out = Self::zero(self.theta);
        for (&(a, b), &x) in &self.coeffs {
            for (&(c, d), &y) in &o.coeffs {
                *out.coeffs.entry((a + c, b + d)).or_default() += x * y * phase(self.theta, b * c);
            }
        }
        Ok(out)
    }

    pub fn star(&self) -> Self {
        let mut out = Self::zero(self.theta);
        for (&(a, b), &x) in &self.coeffs {
            *out.coeffs.entry((-a, -b)).or_default() += x.conj() * phase(self.theta, a * b);
        }
        out
    }

    /// `δ₁(UᵐVⁿ) = 2πm UᵐVⁿ`, `δ₂(UᵐVⁿ) = 2πn UᵐVⁿ`.
    pub fn delta(&self, axis: Axis) -> Self {
        let mut out = Self::zero(self.theta);
        for (&(m, n), &x) in &self.coeffs {
            let k = match axis {
                Axis::One => m,
                Axis::Two => n,
            };
            if k != 0 {
                out.coeffs.insert((m, n), x * (2.0 * PI * k as f64));
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        TorusElement {
            theta: self.theta,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn zip(&self, o: &Self, sign: f64) -> Self {
        assert_eq!(self.theta.to_bits(), o.theta.to_bits(), "theta mismatch");
        let mut out = self.clone();
        for (k, v) in &o.coeffs {
            *out.coeffs.entry(*k).or_default() += v * sign;
        }
        out
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max |a_{mn} − b_{mn}|`.
    pub fn distance(&self, o: &Self) -> f64 {
        self.zip(o, -1.0).max_abs()
    }

    /// Drops coefficients with modulus at most `eps`.
    pub fn pruned(&self, eps: f64) -> Self {
        TorusElement {
            theta: self.theta,
            coeffs: self.coeffs.iter().filter(|(_, v)| v.norm() > eps).map(|(k, v)| (*k, *v)).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&(m, n), c)| json!([m, n, c.re, c.im]))
            .collect();
        json!({ "theta": self.theta, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self, TorusError> {
        let bad = |s: &str| TorusError::Malformed(s.to_string());
        let theta = v.get("theta").and_then(Value::as_f64).ok_or_else(|| bad("missing theta"))?;
        let mut x = Self::zero(theta);
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))? {
            let a = t.as_array().filter(|a| a.len() == 4).ok_or_else(|| bad("term is not [m,n,re,im]"))?;
            let m = a[0].as_i64().ok_or_else(|| bad("m"))?;
            let n = a[1].as_i64().ok_or_else(|| bad("n"))?;
            let re = a[2].as_f64().ok_or_else(|| bad("re"))?;
            let im = a[3].as_f64().ok_or_else(|| bad("im"))?;
            *x.coeffs.entry((m, n)).or_default() += Complex64::new(re, im);
        }
        Ok(x)
    }
}

impl Add for &TorusElement {
    type Output = TorusElement;
    fn add(self, o: &TorusElement) -> TorusElement {
        self.zip(o, 1.0)
    }
}

impl Sub for &TorusElement {
    type Output = TorusElement;
    fn sub(self, o: &TorusElement) -> TorusElement {
        self.zip(o, -1.0)
    }
}

impl Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Panics on a θ mismatch; use [`TorusElement::multiply`] to get an error instead.
impl Mul for &TorusElement {
    type Output = TorusElement;
    fn mul(self, o: &TorusElement) -> TorusElement {
        self.multiply(o).expect("theta mismatch")
    }
}
