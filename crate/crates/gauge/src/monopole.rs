use std::collections::BTreeMap;
use std::f64::consts::PI;

use heisenberg::GradedElement;
use num_complex::Complex64;
use quad_field::{FieldElement, QuadContext};

use crate::GaugeError;

/// `[n]_q = (1−qⁿ)/(1−q)`, and `n` at `q = 1`.
pub fn q_number(n: i64, q: f64) -> f64 {
    if q == 1.0 {
        n as f64
    } else {
        (1.0 - q.powi(n as i32)) / (1.0 - q)
    }
}

/// `[n]_q` over `Q(√Δ)`.
pub fn q_number_exact(n: i64, q: &FieldElement) -> Result<FieldElement, GaugeError> {
    let one = FieldElement::one(&q.delta);
    if *q == one {
        return Ok(FieldElement::integer(n, &q.delta));
    }
    if q.is_zero() {
        return Err(GaugeError::QZero);
    }
    let num = &one - &q.pow(n).map_err(|_| GaugeError::QZero)?;
    num.div(&(&one - q)).map_err(|_| GaugeError::QZero)
}

/// Deformation parameter of the vertical calculus, exact when it lies in `Q(√Δ)`.
#[derive(Debug, Clone)]
pub struct QCalculus {
    pub q: f64,
    pub exact: Option<FieldElement>,
}

impl QCalculus {
    pub fn new(q: f64) -> Result<Self, GaugeError> {
        if q == 0.0 || !q.is_finite() {
            return Err(GaugeError::QZero);
        }
        Ok(QCalculus { q, exact: None })
    }

    pub fn exact(q: FieldElement) -> Result<Self, GaugeError> {
        if q.is_zero() {
            return Err(GaugeError::QZero);
        }
        Ok(QCalculus { q: q.to_f64(), exact: Some(q) })
    }

    /// `q = ε^k`.
    pub fn eps_power(ctx: &QuadContext, k: i64) -> Self {
        QCalculus::exact(ctx.eps_pow(k)).expect("units are non-zero")
    }

    pub fn q_number(&self, n: i64) -> f64 {
        q_number(n, self.q)
    }

    /// Right coefficient `[m]_q q^{−m}` of the vertical derivative on `P_m`, divided by `2πi`.
    fn right_weight(&self, m: i64) -> f64 {
        self.q_number(m) * self.q.powi(-m as i32)
    }

    fn right_weight_exact(&self, m: i64) -> Option<FieldElement> {
        let q = self.exact.as_ref()?;
        Some(&q_number_exact(m, q).ok()? * &q.pow(-m).ok()?)
    }
}

/// Coefficients of `d_v p = c·d_qt·p` (left) and `d_v p = p·c'·d_qt` (right) on one grade.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalCoefficient {
    pub left: Complex64,
    pub right: Complex64,
}

/// Per-grade coefficients `2πi[m]_q` and `2πi[m]_q q^{−m}`.
pub fn vertical_derivative(q: &QCalculus, p: &GradedElement) -> BTreeMap<i64, VerticalCoefficient> {
    let tpi = Complex64::new(0.0, 2.0 * PI);
    p.parts
        .keys()
        .map(|&m| (m, VerticalCoefficient { left: tpi * q.q_number(m), right: tpi * q.right_weight(m) }))
        .collect()
}

#[derive(Debug, Clone)]
pub struct AdaptednessReport {
    pub q: f64,
    pub adapted: bool,
    /// The proportionality constant, when it exists.
    pub constant: Option<Complex64>,
    /// Largest relative deviation of the float ratios from the grade-1 ratio.
    pub spread: f64,
    /// Whether the decision was made in exact arithmetic.
    pub exact: bool,
}

/// Decides whether `num(m)/den(m)` is independent of `m ∈ [−M, M]∖{0}`.
fn ratio_test(
    q: &QCalculus,
    grades: i64,
    tol: f64,
    num: impl Fn(i64) -> FieldElement,
    scale: Complex64,
) -> Result<AdaptednessReport, GaugeError> {
    if grades < 2 {
        return Err(GaugeError::GradeRange(grades));
    }
    let ms: Vec<i64> = (-grades..=grades).filter(|&m| m != 0).collect();
    let floats: Vec<f64> = ms.iter().map(|&m| num(m).to_f64() / q.right_weight(m)).collect();
    let r1 = floats[ms.iter().position(|&m| m == 1).expect("grade 1 in range")];
    let spread = if floats.iter().all(|r| r.is_finite()) {
        floats.iter().map(|r| (r - r1).abs() / r1.abs().max(f64::MIN_POSITIVE)).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    let exact_ratios: Option<Vec<FieldElement>> = ms
        .iter()
        .map(|&m| q.right_weight_exact(m).and_then(|w| num(m).div(&w).ok()))
        .collect();
    let (adapted, exact) = match exact_ratios {
        Some(rs) => (rs.iter().all(|r| *r == rs[0]), true),
        None if q.exact.is_some() => (false, true),
        None => (spread <= tol, false),
    };
    Ok(AdaptednessReport { q: q.q, adapted, constant: adapted.then(|| scale * r1), spread, exact })
}

/// Adapted potentials exist iff the field strength on `P_m` is a fixed multiple of the
/// vertical right coefficient. The constant is `F(d_qt)` in units of `vol`.
pub fn adaptedness_test(ctx: &QuadContext, q: &QCalculus, grades: i64, tol: f64) -> Result<AdaptednessReport, GaugeError> {
    // F eigenvalue 2πε^{−m}c_m over 2πi·weight: the 2π cancels, leaving −i·(ε^{−m}c_m / weight).
    ratio_test(q, grades, tol, |m| &ctx.eps_pow(-m) * &ctx.c(m), Complex64::new(0.0, -1.0))
}

/// Relative version: the potential shift `(ε^{−m}−1)` against the vertical right coefficient.
pub fn relative_adaptedness_test(
    ctx: &QuadContext,
    q: &QCalculus,
    grades: i64,
    tol: f64,
) -> Result<AdaptednessReport, GaugeError> {
    let one = ctx.int(1);
    ratio_test(q, grades, tol, |m| &ctx.eps_pow(-m) - &one, Complex64::new(1.0, 0.0))
}
