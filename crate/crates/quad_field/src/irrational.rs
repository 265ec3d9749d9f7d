use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{exact_sqrt, FieldElement, QuadError};

/// Type triple of `θ = (b+√Δ)/(2a)`, `Δ = b²−4ac`.
///
/// With this normalisation θ is a root of `aθ² − bθ + c = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub delta: BigInt,
}

impl QuadraticIrrational {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, QuadError> {
        Self::from_big(a.into(), b.into(), c.into())
    }

    pub fn from_big(a: BigInt, b: BigInt, c: BigInt) -> Result<Self, QuadError> {
        if a.is_zero() {
            return Err(QuadError::NonQuadratic("a = 0".into()));
        }
        if !a.gcd(&b).gcd(&c).is_one() {
            return Err(QuadError::NonQuadratic(format!(
                "({a},{b},{c}) is not coprime"
            )));
        }
        let delta = &b * &b - BigInt::from(4) * &a * &c;
        if !delta.is_positive() || exact_sqrt(&delta).is_some() {
            return Err(QuadError::NonQuadratic(format!(
                "discriminant {delta} is not a positive non-square"
            )));
        }
        Ok(QuadraticIrrational { a, b, c, delta })
    }

    /// The golden ratio (1+√5)/2.
    pub fn golden() -> Self {
        Self::new(1, 1, -1).expect("valid triple")
    }

    pub fn sqrt2() -> Self {
        Self::new(1, 0, -2).expect("valid triple")
    }

    pub fn one_plus_sqrt3() -> Self {
        Self::new(1, 2, -2).expect("valid triple")
    }

    /// θ as an exact element of `Q[√Δ]`.
    pub fn theta(&self) -> FieldElement {
        let two_a = BigInt::from(2) * &self.a;
        FieldElement::new(
            BigRational::new(self.b.clone(), two_a.clone()),
            BigRational::new(BigInt::one(), two_a),
            self.delta.clone(),
        )
    }

    pub fn to_f64(&self) -> f64 {
        self.theta().to_f64()
    }

    /// Exact check of `aθ² − bθ + c = 0`.
    pub fn relation_holds(&self) -> bool {
        let t = self.theta();
        let d = &self.delta;
        let lhs = &(&FieldElement::rational(BigRational::from_integer(self.a.clone()), d) * &(&t * &t))
            - &(&FieldElement::rational(BigRational::from_integer(self.b.clone()), d) * &t);
        (&lhs + &FieldElement::rational(BigRational::from_integer(self.c.clone()), d)).is_zero()
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{}) Δ={}", self.a, self.b, self.c, self.delta)
    }
}

/// Classifies `θ = p + q√d`.
pub fn classify(p: &BigRational, q: &BigRational, d: &BigInt) -> Result<QuadraticIrrational, QuadError> {
    if q.is_zero() {
        return Err(QuadError::NonQuadratic("q = 0".into()));
    }
    if !d.is_positive() {
        return Err(QuadError::NonQuadratic(format!("d = {d} is not positive")));
    }
    if exact_sqrt(d).is_some() {
        return Err(QuadError::NonQuadratic(format!("d = {d} is a perfect square")));
    }
    // (θ − p)² = q²d, i.e. θ² − 2pθ + (p² − q²d) = 0
    let dd = BigRational::from_integer(d.clone());
    let c2 = BigRational::one();
    let c1 = -(p + p);
    let c0 = p * p - q * q * dd;
    let den = c1.denom().lcm(c0.denom());
    let scale = BigRational::from_integer(den);
    let (ia, ib, ic) = (
        (c2 * &scale).to_integer(),
        (c1 * &scale).to_integer(),
        (c0 * &scale).to_integer(),
    );
    let g = ia.gcd(&ib).gcd(&ic);
    let (ia, ib, ic) = (ia / &g, ib / &g, ic / &g);
    // aθ² − bθ + c with θ = b/(2a) + √Δ/(2a): the root is picked by sign(a) = sign(q)
    let sign = if q.is_positive() { BigInt::one() } else { -BigInt::one() };
    let t = QuadraticIrrational::from_big(&ia * &sign, -(&ib * &sign), &ic * &sign)?;
    debug_assert!(t.relation_holds());
    Ok(t)
}
