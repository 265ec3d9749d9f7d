use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::{exact_sqrt, FieldElement, QuadError};

pub const DEFAULT_SEARCH_BOUND: u64 = 1_000_000;

/// The unit `(u+v√Δ)/2` of the order of discriminant Δ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderUnit {
    pub u: BigInt,
    pub v: BigInt,
    pub delta: BigInt,
}

impl OrderUnit {
    pub fn one(delta: &BigInt) -> Self {
        OrderUnit { u: 2.into(), v: 0.into(), delta: delta.clone() }
    }

    pub fn value(&self) -> FieldElement {
        let two = BigInt::from(2);
        FieldElement::new(
            BigRational::new(self.u.clone(), two.clone()),
            BigRational::new(self.v.clone(), two),
            self.delta.clone(),
        )
    }

    /// `(u² − Δv²)/4`, which is ±1 for a unit.
    pub fn norm(&self) -> BigInt {
        (&self.u * &self.u - &self.delta * &self.v * &self.v) / 4
    }
}

impl fmt::Display for OrderUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

pub(crate) fn validate_discriminant(delta: &BigInt) -> Result<(), QuadError> {
    let r: BigInt = num_integer::Integer::mod_floor(delta, &BigInt::from(4));
    let ok = delta.is_positive()
        && exact_sqrt(delta).is_none()
        && (r.is_zero() || r == BigInt::from(1));
    if ok {
        Ok(())
    } else {
        Err(QuadError::InvalidDiscriminant(delta.to_string()))
    }
}

fn scan(delta: &BigInt, bound: u64, rhs: &[i64]) -> Result<OrderUnit, QuadError> {
    validate_discriminant(delta)?;
    for v in 1..=bound {
        let v = BigInt::from(v);
        let dv2 = delta * &v * &v;
        for &k in rhs {
            if let Some(u) = exact_sqrt(&(&dv2 + BigInt::from(k))) {
                if u.is_positive() {
                    return Ok(OrderUnit { u, v, delta: delta.clone() });
                }
            }
        }
    }
    Err(QuadError::SearchExhausted(bound))
}

/// Smallest `u,v > 0` with `u² − Δv² = 4`: the norm-positive fundamental unit.
pub fn pell_unit(delta: &BigInt) -> Result<OrderUnit, QuadError> {
    pell_unit_with_bound(delta, DEFAULT_SEARCH_BOUND)
}

pub fn pell_unit_with_bound(delta: &BigInt, bound: u64) -> Result<OrderUnit, QuadError> {
    scan(delta, bound, &[4])
}

/// Fundamental unit of the order, of either norm (`u² − Δv² = ±4`).
pub fn fundamental_unit(delta: &BigInt) -> Result<OrderUnit, QuadError> {
    scan(delta, DEFAULT_SEARCH_BOUND, &[-4, 4])
}
