use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::QuadError;

/// `r + s√Δ` with rational `r`, `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub r: BigRational,
    pub s: BigRational,
    pub delta: BigInt,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl FieldElement {
    pub fn new(r: BigRational, s: BigRational, delta: BigInt) -> Self {
        FieldElement { r, s, delta }
    }

    pub fn from_ints(r: i64, s: i64, delta: i64) -> Self {
        FieldElement::new(rat(r), rat(s), BigInt::from(delta))
    }

    pub fn rational(r: BigRational, delta: &BigInt) -> Self {
        FieldElement::new(r, BigRational::zero(), delta.clone())
    }

    pub fn integer(n: i64, delta: &BigInt) -> Self {
        FieldElement::rational(rat(n), delta)
    }

    pub fn one(delta: &BigInt) -> Self {
        FieldElement::integer(1, delta)
    }

    pub fn zero(delta: &BigInt) -> Self {
        FieldElement::integer(0, delta)
    }

    /// `√Δ` itself.
    pub fn sqrt_delta(delta: &BigInt) -> Self {
        FieldElement::new(BigRational::zero(), BigRational::one(), delta.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// Galois conjugate `r − s√Δ`.
    pub fn conj(&self) -> Self {
        FieldElement::new(self.r.clone(), -self.s.clone(), self.delta.clone())
    }

    /// Field norm `r² − Δs²`.
    pub fn norm(&self) -> BigRational {
        &self.r * &self.r - BigRational::from_integer(self.delta.clone()) * &self.s * &self.s
    }

    pub fn trace(&self) -> BigRational {
        &self.r + &self.r
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        FieldElement::new(&self.r * k, &self.s * k, self.delta.clone())
    }

    pub fn inv(&self) -> Result<Self, QuadError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(QuadError::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, QuadError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Result<Self, QuadError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = FieldElement::one(&self.delta);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Exact sign of the real number `r + s√Δ`.
    pub fn signum(&self) -> Ordering {
        let zero = BigRational::zero();
        let sr = self.r.cmp(&zero);
        let ss = self.s.cmp(&zero);
        if ss == Ordering::Equal {
            return sr;
        }
        if sr == Ordering::Equal || sr == ss {
            return ss;
        }
        // opposite signs: compare r² with Δs²
        let lhs = &self.r * &self.r;
        let rhs = BigRational::from_integer(self.delta.clone()) * &self.s * &self.s;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sr,
            Ordering::Less => ss,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Double precision value. When `r` and `s√Δ` nearly cancel the value is
    /// recovered as `norm / conj`, which has no cancellation.
    pub fn to_f64(&self) -> f64 {
        let sd = self.delta.to_f64().unwrap_or(f64::NAN).sqrt();
        let r = self.r.to_f64().unwrap_or(f64::NAN);
        let s = self.s.to_f64().unwrap_or(f64::NAN);
        if r == 0.0 || s == 0.0 || (r > 0.0) == (s > 0.0) {
            return r + s * sd;
        }
        let n = self.norm().to_f64().unwrap_or(f64::NAN);
        n / (r - s * sd)
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.delta, other.delta,
            "field elements over different discriminants"
        );
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        self.check_same_field(o);
        FieldElement::new(&self.r + &o.r, &self.s + &o.s, self.delta.clone())
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        self.check_same_field(o);
        FieldElement::new(&self.r - &o.r, &self.s - &o.s, self.delta.clone())
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        self.check_same_field(o);
        let d = BigRational::from_integer(self.delta.clone());
        FieldElement::new(
            &self.r * &o.r + d * &self.s * &o.s,
            &self.r * &o.s + &self.s * &o.r,
            self.delta.clone(),
        )
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(-self.r.clone(), -self.s.clone(), self.delta.clone())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $f(self, o: FieldElement) -> FieldElement {
                (&self).$f(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Splits `n = k²·n0` with `n0` squarefree.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            k *= &p;
        }
        p += 1;
    }
    (k, rest)
}

impl fmt::Display for FieldElement {
    /// Writes `(R+S√d)/D` with `d` squarefree, e.g. `(3+√5)/2` or `3+2√2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (k, d0) = square_part(&self.delta);
        let s = &self.s * BigRational::from_integer(k);
        let den = self.r.denom().lcm(s.denom());
        let rn = (&self.r * BigRational::from_integer(den.clone())).to_integer();
        let sn = (&s * BigRational::from_integer(den.clone())).to_integer();
        let mut body = String::new();
        if !rn.is_zero() || sn.is_zero() {
            body.push_str(&rn.to_string());
        }
        if !sn.is_zero() {
            let mag = sn.abs();
            if sn.is_negative() {
                body.push('-');
            } else if !rn.is_zero() {
                body.push('+');
            }
            if !mag.is_one() {
                body.push_str(&mag.to_string());
            }
            body.push_str(&format!("√{}", d0));
        }
        if den.is_one() {
            write!(f, "{}", body)
        } else if rn.is_zero() || sn.is_zero() {
            write!(f, "{}/{}", body, den)
        } else {
            write!(f, "({})/{}", body, den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let golden_unit = FieldElement::new(
            BigRational::new(3.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            5.into(),
        );
        assert_eq!(golden_unit.to_string(), "(3+√5)/2");
        assert_eq!(FieldElement::from_ints(3, 1, 8).to_string(), "3+2√2");
        let e12 = FieldElement::new(rat(2), BigRational::new(1.into(), 2.into()), 12.into());
        assert_eq!(e12.to_string(), "2+√3");
        assert_eq!(FieldElement::from_ints(0, -1, 5).to_string(), "-√5");
    }

    #[test]
    fn small_values_keep_precision() {
        // (3+√5)/2 to the -20: direct evaluation would lose most digits
        let e = FieldElement::new(
            BigRational::new(3.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            5.into(),
        );
        let x = e.pow(-20).unwrap();
        let expect = ((3.0 + 5f64.sqrt()) / 2.0).powi(-20);
        assert!((x.to_f64() / expect - 1.0).abs() < 1e-14);
    }

    #[test]
    fn signum_exact() {
        assert_eq!(FieldElement::from_ints(3, -1, 8).signum(), Ordering::Greater);
        assert_eq!(FieldElement::from_ints(-3, 1, 8).signum(), Ordering::Less);
        assert_eq!(FieldElement::from_ints(2, -1, 5).signum(), Ordering::Less);
    }
}
