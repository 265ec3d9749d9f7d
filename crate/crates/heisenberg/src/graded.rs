use std::collections::BTreeMap;
use std::sync::Arc;

use nc_torus::{Axis, TorusElement};
use num_complex::Complex64;

use crate::product::{jsum, pair};
use crate::{Diagnostics, Frame, HeisError, HeisenbergElement};

/// Homogeneous component: the torus in grade 0, a Heisenberg module otherwise.
#[derive(Debug, Clone)]
pub enum Part {
    Torus(TorusElement),
    Module(HeisenbergElement),
}

impl Part {
    pub fn max_abs(&self) -> f64 {
        match self {
            Part::Torus(t) => t.max_abs(),
            Part::Module(h) => h.max_abs(),
        }
    }

    fn scale(&self, c: Complex64) -> Part {
        match self {
            Part::Torus(t) => Part::Torus(t.scale(c)),
            Part::Module(h) => Part::Module(h.scale(c)),
        }
    }

    fn add(&self, o: &Part) -> Result<Part, HeisError> {
        match (self, o) {
            (Part::Torus(a), Part::Torus(b)) => Ok(Part::Torus(a + b)),
            (Part::Module(a), Part::Module(b)) => Ok(Part::Module(a.add(b)?)),
            _ => Err(HeisError::GradeMismatch(0, 1)),
        }
    }
}

/// Finite sum of homogeneous elements of `P = ⊕_m P_m`.
#[derive(Debug, Clone)]
pub struct GradedElement {
    pub frame: Arc<Frame>,
    pub parts: BTreeMap<i64, Part>,
}

impl GradedElement {
    pub fn zero(frame: &Arc<Frame>) -> Self {
        GradedElement { frame: frame.clone(), parts: BTreeMap::new() }
    }

    pub fn torus(frame: &Arc<Frame>, t: TorusElement) -> Self {
        let mut x = Self::zero(frame);
        x.parts.insert(0, Part::Torus(t));
        x
    }

    pub fn one(frame: &Arc<Frame>) -> Self {
        Self::torus(frame, TorusElement::one(frame.theta))
    }

    pub fn module(h: HeisenbergElement) -> Self {
        let mut x = Self::zero(&h.frame);
        x.parts.insert(h.m, Part::Module(h));
        x
    }

    pub fn part(&self, m: i64) -> Option<&Part> {
        self.parts.get(&m)
    }

    pub fn module_part(&self, m: i64) -> Option<&HeisenbergElement> {
        match self.parts.get(&m) {
            Some(Part::Module(h)) => Some(h),
            _ => None,
        }
    }

    pub fn torus_part(&self) -> Option<&TorusElement> {
        match self.parts.get(&0) {
            Some(Part::Torus(t)) => Some(t),
            _ => None,
        }
    }

    fn insert_add(&mut self, m: i64, p: Part) -> Result<(), HeisError> {
        let v = match self.parts.remove(&m) {
            Some(old) => old.add(&p)?,
            None => p,
        };
        self.parts.insert(m, v);
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, HeisError> {
        let mut out = self.clone();
        for (&m, p) in &o.parts {
            out.insert_add(m, p.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, HeisError> {
        self.add(&o.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map_parts(|_, p| p.scale(c))
    }

    /// Scales the grade-m part by `w(m)`.
    pub fn scale_by_grade(&self, w: impl Fn(i64) -> Complex64) -> Self {
        self.map_parts(|m, p| p.scale(w(m)))
    }

    fn map_parts(&self, f: impl Fn(i64, &Part) -> Part) -> Self {
        GradedElement { frame: self.frame.clone(), parts: self.parts.iter().map(|(&m, p)| (m, f(m, p))).collect() }
    }

    /// `σ(p) = ε^{−m}p` on `P_m`.
    pub fn sigma(&self) -> Self {
        let q = self.frame.quad.clone();
        self.scale_by_grade(|m| Complex64::new(q.eps_pow_f64(-m), 0.0))
    }

    pub fn star(&self) -> Result<Self, HeisError> {
        let mut out = Self::zero(&self.frame);
        for (&m, p) in &self.parts {
            let s = match p {
                Part::Torus(t) => Part::Torus(t.star()),
                Part::Module(h) => Part::Module(h.star_p()?),
            };
            out.insert_add(-m, s)?;
        }
        Ok(out)
    }

    /// `∂ⱼ`, restricting to `δⱼ` on the torus.
    pub fn partial(&self, axis: Axis) -> Self {
        self.map_parts(|_, p| match p {
            Part::Torus(t) => Part::Torus(t.delta(axis)),
            Part::Module(h) => Part::Module(h.partial(axis)),
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self, HeisError> {
        Ok(self.mul_diag(o)?.0)
    }

    /// Product together with its truncation report.
    pub fn mul_diag(&self, o: &Self) -> Result<(Self, Diagnostics), HeisError> {
        if self.frame.grid != o.frame.grid {
            return Err(HeisError::GridMismatch);
        }
        let mut out = Self::zero(&self.frame);
        let mut diag = Diagnostics::default();
        for (&m, p) in &self.parts {
            for (&n, q) in &o.parts {
                let r = match (p, q) {
                    (Part::Torus(a), Part::Torus(b)) => Part::Torus(a.multiply(b).map_err(|_| HeisError::GridMismatch)?),
                    (Part::Torus(a), Part::Module(g)) => Part::Module(g.left_act_torus(a)),
                    (Part::Module(f), Part::Torus(b)) => Part::Module(f.right_act_torus(b)),
                    (Part::Module(f), Part::Module(g)) if m + n == 0 => {
                        let (t, d) = pair(f, g)?;
                        diag.merge(d);
                        Part::Torus(t)
                    }
                    (Part::Module(f), Part::Module(g)) => {
                        let (h, d) = jsum(f, g)?;
                        diag.merge(d);
                        Part::Module(h)
                    }
                };
                out.insert_add(m + n, r)?;
            }
        }
        Ok((out, diag))
    }

    pub fn max_abs(&self) -> f64 {
        self.parts.values().map(Part::max_abs).fold(0.0, f64::max)
    }

    /// Largest absolute difference over all grades.
    pub fn distance(&self, o: &Self) -> Result<f64, HeisError> {
        Ok(self.sub(o)?.max_abs())
    }

    /// Distance relative to the larger of the two sizes.
    pub fn rel_distance(&self, o: &Self) -> Result<f64, HeisError> {
        let s = self.max_abs().max(o.max_abs()).max(f64::MIN_POSITIVE);
        Ok(self.distance(o)? / s)
    }
}
