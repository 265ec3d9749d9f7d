use std::f64::consts::PI;
use std::sync::Arc;

use nc_torus::{Axis, TorusElement};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::grid::derivative;
use crate::{Frame, GradeData, HeisError, Spline};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    U,
    V,
}

pub(crate) fn e(t: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * t.rem_euclid(1.0))
}

/// A vector of `P_m`, `m ≠ 0`: samples on `[−L, L]` for each sector `k mod |c_m|`.
#[derive(Debug, Clone)]
pub struct HeisenbergElement {
    pub frame: Arc<Frame>,
    pub m: i64,
    pub samples: Vec<Vec<Complex64>>,
}

/// Splines for all sectors of an element, addressed by integer sector index.
pub(crate) struct Sampler {
    pub g: GradeData,
    splines: Vec<Spline>,
}

impl Sampler {
    pub fn at(&self, x: f64, k: i64) -> Complex64 {
        self.splines[self.g.sector(k)].eval(x)
    }
}

impl HeisenbergElement {
    pub fn from_fn(frame: &Arc<Frame>, m: i64, f: impl Fn(f64, usize) -> Complex64) -> Result<Self, HeisError> {
        if m == 0 {
            return Err(HeisError::GradeZero);
        }
        let g = frame.grade(m);
        let xs = frame.grid.xs();
        let samples = (0..g.sectors()).map(|k| xs.iter().map(|&x| f(x, k)).collect()).collect();
        Ok(HeisenbergElement { frame: frame.clone(), m, samples })
    }

    pub fn zero(frame: &Arc<Frame>, m: i64) -> Result<Self, HeisError> {
        Self::from_fn(frame, m, |_, _| Complex64::default())
    }

    pub fn grade_data(&self) -> GradeData {
        self.frame.grade(self.m)
    }

    pub fn sectors(&self) -> usize {
        self.samples.len()
    }

    pub(crate) fn sampler(&self) -> Sampler {
        let gr = &self.frame.grid;
        Sampler {
            g: self.grade_data(),
            splines: self.samples.iter().map(|y| Spline::new(-gr.l, gr.h(), y)).collect(),
        }
    }

    /// Value at an arbitrary point by spline interpolation (zero off the window).
    pub fn eval(&self, x: f64, k: i64) -> Complex64 {
        let g = self.grade_data();
        let gr = &self.frame.grid;
        Spline::new(-gr.l, gr.h(), &self.samples[g.sector(k)]).eval(x)
    }

    /// Builds a same-frame element of grade `m` from a point rule.
    pub(crate) fn tabulate(frame: &Arc<Frame>, m: i64, f: impl Fn(f64, i64) -> Complex64) -> Self {
        let g = frame.grade(m);
        let xs = frame.grid.xs();
        let samples = (0..g.sectors()).map(|k| xs.iter().map(|&x| f(x, k as i64)).collect()).collect();
        HeisenbergElement { frame: frame.clone(), m, samples }
    }

    pub fn same_space(&self, o: &Self) -> Result<(), HeisError> {
        if !Arc::ptr_eq(&self.frame, &o.frame) && self.frame.grid != o.frame.grid {
            return Err(HeisError::GridMismatch);
        }
        if self.m != o.m {
            return Err(HeisError::GradeMismatch(self.m, o.m));
        }
        Ok(())
    }

    pub fn map(&self, f: impl Fn(f64, usize, Complex64) -> Complex64) -> Self {
        let xs = self.frame.grid.xs();
        let samples = self
            .samples
            .iter()
            .enumerate()
            .map(|(k, row)| row.iter().zip(&xs).map(|(v, &x)| f(x, k, *v)).collect())
            .collect();
        HeisenbergElement { frame: self.frame.clone(), m: self.m, samples }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|_, _, v| v * c)
    }

    pub fn add(&self, o: &Self) -> Result<Self, HeisError> {
        self.same_space(o)?;
        let mut out = self.clone();
        for (row, orow) in out.samples.iter_mut().zip(&o.samples) {
            for (v, w) in row.iter_mut().zip(orow) {
                *v += w;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self, HeisError> {
        self.add(&o.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `max |f − g| / max(|f|, |g|)`.
    pub fn rel_distance(&self, o: &Self) -> Result<f64, HeisError> {
        let scale = self.max_abs().max(o.max_abs()).max(f64::MIN_POSITIVE);
        Ok(self.sub(o)?.max_abs() / scale)
    }

    /// `⟨f, g⟩ = Σ_k ∫ conj(f) g dx`.
    pub fn inner(&self, o: &Self) -> Result<Complex64, HeisError> {
        self.same_space(o)?;
        let gr = &self.frame.grid;
        Ok(self
            .samples
            .iter()
            .zip(&o.samples)
            .map(|(a, b)| gr.integrate(&a.iter().zip(b).map(|(x, y)| x.conj() * y).collect::<Vec<_>>()))
            .sum())
    }

    pub fn norm_l2(&self) -> f64 {
        self.inner(self).expect("same space").re.max(0.0).sqrt()
    }

    /// Largest modulus among the outermost `width` samples of every sector, relative to the peak.
    pub fn boundary_mass(&self, width: usize) -> f64 {
        let peak = self.max_abs().max(f64::MIN_POSITIVE);
        let mut worst: f64 = 0.0;
        for row in &self.samples {
            let n = row.len();
            for i in (0..width.min(n)).chain(n.saturating_sub(width)..n) {
                worst = worst.max(row[i].norm());
            }
        }
        worst / peak
    }

    /// `f·(UᵖV^q)`.
    pub fn right_monomial(&self, p: i64, q: i64) -> Self {
        let s = self.sampler();
        let g = s.g;
        let (cf, df) = (g.c as f64, g.d as f64);
        let shift = q as f64 * g.e / cf;
        Self::tabulate(&self.frame, self.m, |x, k| {
            let ph = e(p as f64 * (x - shift - (k - q) as f64 * df / cf));
            ph * s.at(x - shift, k - q)
        })
    }

    /// `(UᵖV^q)·f`.
    pub fn left_monomial(&self, p: i64, q: i64) -> Self {
        let s = self.sampler();
        let g = s.g;
        let cf = g.c as f64;
        Self::tabulate(&self.frame, self.m, |x, k| {
            e(p as f64 * (x / g.e - k as f64 / cf)) * s.at(x - q as f64 / cf, k - q * g.a)
        })
    }

    pub fn right_act(&self, gen: Generator) -> Self {
        match gen {
            Generator::U => self.right_monomial(1, 0),
            Generator::V => self.right_monomial(0, 1),
        }
    }

    pub fn left_act(&self, gen: Generator) -> Self {
        match gen {
            Generator::U => self.left_monomial(1, 0),
            Generator::V => self.left_monomial(0, 1),
        }
    }

    fn act_torus(&self, b: &TorusElement, right: bool) -> Self {
        let s = self.sampler();
        let g = s.g;
        let (cf, df) = (g.c as f64, g.d as f64);
        let terms: Vec<_> = b.coeffs.iter().filter(|(_, c)| c.norm() > 0.0).map(|(&(p, q), &c)| (p, q, c)).collect();
        Self::tabulate(&self.frame, self.m, |x, k| {
            let mut acc = Complex64::default();
            for &(p, q, c) in &terms {
                acc += if right {
                    let shift = q as f64 * g.e / cf;
                    c * e(p as f64 * (x - shift - (k - q) as f64 * df / cf)) * s.at(x - shift, k - q)
                } else {
                    c * e(p as f64 * (x / g.e - k as f64 / cf)) * s.at(x - q as f64 / cf, k - q * g.a)
                };
            }
            acc
        })
    }

    /// `f·b` for `b ∈ A_θ`.
    pub fn right_act_torus(&self, b: &TorusElement) -> Self {
        self.act_torus(b, true)
    }

    /// `b·f` for `b ∈ A_θ`.
    pub fn left_act_torus(&self, b: &TorusElement) -> Self {
        self.act_torus(b, false)
    }

    /// `f*(x,k) = conj f(ε^m x, −a_m k)`, an element of `P_{−m}`.
    pub fn star_p(&self) -> Result<Self, HeisError> {
        let s = self.sampler();
        let g = s.g;
        if g.e < 1.0 {
            // samples with |x| > ε^m L land outside the target window
            let lim = g.e * self.frame.grid.l;
            let peak = self.max_abs().max(f64::MIN_POSITIVE);
            let xs = self.frame.grid.xs();
            let lost = self
                .samples
                .iter()
                .flat_map(|row| row.iter().zip(&xs).filter(|(_, x)| x.abs() > lim).map(|(v, _)| v.norm()))
                .fold(0.0, f64::max)
                / peak;
            if lost > self.frame.grid.tol {
                return Err(HeisError::WindowOverflow { mass: lost, factor: g.e });
            }
        }
        Ok(Self::tabulate(&self.frame, -self.m, |x, k| s.at(g.e * x, -g.a * k).conj()))
    }

    /// `σ(f) = ε^{−m} f`.
    pub fn sigma(&self) -> Self {
        self.scale(Complex64::new(self.frame.quad.eps_pow_f64(-self.m), 0.0))
    }

    /// `∂₁ = −i d/dx` (fourth-order differences), `∂₂ = 2πε^{−m}c_m x`.
    pub fn partial(&self, axis: Axis) -> Self {
        match axis {
            Axis::One => {
                let h = self.frame.grid.h();
                let samples = self
                    .samples
                    .iter()
                    .map(|row| derivative(row, h).into_iter().map(|v| v * Complex64::new(0.0, -1.0)).collect())
                    .collect();
                HeisenbergElement { frame: self.frame.clone(), m: self.m, samples }
            }
            Axis::Two => {
                let lam = self.partial2_factor();
                self.map(|x, _, v| v * (lam * x))
            }
        }
    }

    /// `λ_m = 2πε^{−m}c_m`, so that `∂₂f = λ_m x f` and `[∂₁,∂₂] = −iλ_m`.
    pub fn partial2_factor(&self) -> f64 {
        let g = self.grade_data();
        2.0 * PI * self.frame.quad.eps_pow_f64(-self.m) * g.c as f64
    }

    pub fn to_json(&self) -> Value {
        let gr = &self.frame.grid;
        let sectors: Vec<Value> = self
            .samples
            .iter()
            .map(|row| json!({ "re": row.iter().map(|v| v.re).collect::<Vec<_>>(), "im": row.iter().map(|v| v.im).collect::<Vec<_>>() }))
            .collect();
        json!({
            "grade": self.m,
            "theta": self.frame.theta,
            "grid": { "L": gr.l, "N": gr.n, "J": gr.j, "tol": gr.tol, "mode_cutoff": gr.mode_cutoff },
            "sectors": sectors,
        })
    }
}
