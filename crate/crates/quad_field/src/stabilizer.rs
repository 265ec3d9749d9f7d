use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::pell::validate_discriminant;
use crate::{pell_unit, FieldElement, OrderUnit, QuadError, QuadraticIrrational};

/// Integer 2×2 matrix `(g11 g12; g21 g22)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StabilizerMatrix {
    pub g11: BigInt,
    pub g12: BigInt,
    pub g21: BigInt,
    pub g22: BigInt,
}

impl StabilizerMatrix {
    pub fn new(g11: i64, g12: i64, g21: i64, g22: i64) -> Self {
        StabilizerMatrix { g11: g11.into(), g12: g12.into(), g21: g21.into(), g22: g22.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.g11 * &self.g22 - &self.g12 * &self.g21
    }

    pub fn mul(&self, o: &Self) -> Self {
        StabilizerMatrix {
            g11: &self.g11 * &o.g11 + &self.g12 * &o.g21,
            g12: &self.g11 * &o.g12 + &self.g12 * &o.g22,
            g21: &self.g21 * &o.g11 + &self.g22 * &o.g21,
            g22: &self.g21 * &o.g12 + &self.g22 * &o.g22,
        }
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_sl2(&self) -> Self {
        StabilizerMatrix {
            g11: self.g22.clone(),
            g12: -self.g12.clone(),
            g21: -self.g21.clone(),
            g22: self.g11.clone(),
        }
    }

    pub fn pow(&self, m: i64) -> Self {
        let base = if m < 0 { self.inverse_sl2() } else { self.clone() };
        let mut acc = Self::identity();
        for _ in 0..m.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact test of `g ▷ θ = θ`, i.e. `g21θ² + (g22 − g11)θ − g12 = 0`.
    pub fn fixes(&self, t: &QuadraticIrrational) -> bool {
        let th = t.theta();
        let d = &t.delta;
        let k = |n: &BigInt| FieldElement::rational(BigRational::from_integer(n.clone()), d);
        let e = &(&(&k(&self.g21) * &(&th * &th)) + &(&k(&(&self.g22 - &self.g11)) * &th))
            - &k(&self.g12);
        e.is_zero()
    }

    pub fn entries_i64(&self) -> [i64; 4] {
        [&self.g11, &self.g12, &self.g21, &self.g22].map(|x| x.to_i64().expect("entry fits in i64"))
    }
}

impl fmt::Display for StabilizerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.g11, self.g12, self.g21, self.g22)
    }
}

/// `Φ((u+v√Δ)/2) = ((u+bv)/2, −cv; av, (u−bv)/2)`.
pub fn phi(unit: &OrderUnit, t: &QuadraticIrrational) -> Result<StabilizerMatrix, QuadError> {
    if unit.delta != t.delta {
        return Err(QuadError::DiscriminantMismatch(unit.delta.to_string(), t.delta.to_string()));
    }
    if unit.norm() != BigInt::one() {
        return Err(QuadError::NonIntegral(format!("unit {unit} does not have norm 1")));
    }
    let two = BigInt::from(2);
    let p = &unit.u + &t.b * &unit.v;
    let m = &unit.u - &t.b * &unit.v;
    if p.is_odd() || m.is_odd() {
        return Err(QuadError::NonIntegral(format!("u ± bv odd for u={}, v={}", unit.u, unit.v)));
    }
    Ok(StabilizerMatrix {
        g11: p / &two,
        g12: -(&t.c * &unit.v),
        g21: &t.a * &unit.v,
        g22: m / &two,
    })
}

/// `Φ⁻¹(g) = g21θ + g22`.
pub fn phi_inverse(g: &StabilizerMatrix, t: &QuadraticIrrational) -> Result<FieldElement, QuadError> {
    if g.det() != BigInt::one() || !g.fixes(t) {
        return Err(QuadError::NotStabilizer);
    }
    let d = &t.delta;
    let th = t.theta();
    Ok(&(&FieldElement::rational(BigRational::from_integer(g.g21.clone()), d) * &th)
        + &FieldElement::rational(BigRational::from_integer(g.g22.clone()), d))
}

/// Entries of `Φ(ε^m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitPowerData {
    pub m: i64,
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl UnitPowerData {
    pub fn matrix(&self) -> StabilizerMatrix {
        StabilizerMatrix { g11: self.a.clone(), g12: self.b.clone(), g21: self.c.clone(), g22: self.d.clone() }
    }

    pub fn a_i64(&self) -> i64 {
        self.a.to_i64().expect("a_m fits in i64")
    }
    pub fn b_i64(&self) -> i64 {
        self.b.to_i64().expect("b_m fits in i64")
    }
    pub fn c_i64(&self) -> i64 {
        self.c.to_i64().expect("c_m fits in i64")
    }
    pub fn d_i64(&self) -> i64 {
        self.d.to_i64().expect("d_m fits in i64")
    }
}

pub fn unit_power_data(m: i64, unit: &OrderUnit, t: &QuadraticIrrational) -> Result<UnitPowerData, QuadError> {
    let g = phi(unit, t)?.pow(m);
    Ok(UnitPowerData { m, a: g.g11, b: g.g12, c: g.g21, d: g.g22 })
}

/// A quadratic irrationality together with its Pell unit ε, the data every
/// downstream module needs.
#[derive(Debug, Clone)]
pub struct QuadContext {
    pub theta: QuadraticIrrational,
    pub unit: OrderUnit,
    pub eps: FieldElement,
    pub theta_f64: f64,
    pub eps_f64: f64,
}

impl QuadContext {
    pub fn new(theta: QuadraticIrrational) -> Result<Self, QuadError> {
        validate_discriminant(&theta.delta)?;
        let unit = pell_unit(&theta.delta)?;
        let eps = unit.value();
        Ok(QuadContext {
            theta_f64: theta.to_f64(),
            eps_f64: eps.to_f64(),
            theta,
            unit,
            eps,
        })
    }

    pub fn golden() -> Self {
        Self::new(QuadraticIrrational::golden()).expect("golden ratio context")
    }

    pub fn power(&self, m: i64) -> UnitPowerData {
        unit_power_data(m, &self.unit, &self.theta).expect("Pell unit has an integral image")
    }

    pub fn eps_pow(&self, m: i64) -> FieldElement {
        self.eps.pow(m).expect("units are invertible")
    }

    pub fn eps_pow_f64(&self, m: i64) -> f64 {
        self.eps_pow(m).to_f64()
    }

    /// `c_m` as a field element.
    pub fn c(&self, m: i64) -> FieldElement {
        FieldElement::rational(BigRational::from_integer(self.power(m).c), &self.theta.delta)
    }

    pub fn rational(&self, x: BigRational) -> FieldElement {
        FieldElement::rational(x, &self.theta.delta)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        FieldElement::integer(n, &self.theta.delta)
    }

    pub fn is_zero_c(&self, m: i64) -> bool {
        self.power(m).c.is_zero()
    }
}
