//! Uniform sampling grid, cubic spline interpolation, finite differences and
//! trapezoidal quadrature.

use num_complex::Complex64;

use crate::HeisError;

/// Sampling parameters shared by every element of a computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    /// Half-width of the window `[−L, L]`.
    pub l: f64,
    /// Samples per sector, endpoints included.
    pub n: usize,
    /// Extra terms on each side of the j-sums beyond those that can touch the window.
    pub j: usize,
    pub tol: f64,
    /// Fourier modes `|n₁|,|n₂| ≤ mode_cutoff` kept when pairing into the torus.
    pub mode_cutoff: i64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { l: 12.0, n: 1024, j: 8, tol: 1e-6, mode_cutoff: 4 }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), HeisError> {
        if !(self.l > 0.0) || self.n < 8 || self.n % 2 != 0 || !(self.tol > 0.0) || self.mode_cutoff < 0 {
            return Err(HeisError::BadGrid(format!("{self:?}")));
        }
        Ok(())
    }

    pub fn h(&self) -> f64 {
        2.0 * self.l / (self.n - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        -self.l + i as f64 * self.h()
    }

    pub fn xs(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.x(i)).collect()
    }

    /// Trapezoidal rule on one sector.
    pub fn integrate(&self, y: &[Complex64]) -> Complex64 {
        let n = y.len();
        let s: Complex64 = y.iter().sum();
        (s - (y[0] + y[n - 1]) * 0.5) * self.h()
    }
}

/// Natural cubic spline through uniform samples, zero outside the window.
#[derive(Debug, Clone)]
pub struct Spline {
    x0: f64,
    h: f64,
    y: Vec<Complex64>,
    m2: Vec<Complex64>,
}

impl Spline {
    pub fn new(x0: f64, h: f64, y: &[Complex64]) -> Self {
        let n = y.len();
        let mut m2 = vec![Complex64::default(); n];
        if n >= 3 {
            // m[i−1] + 4m[i] + m[i+1] = 6(y[i+1] − 2y[i] + y[i−1])/h², m[0] = m[n−1] = 0
            let k = n - 2;
            let mut cp = vec![0.0; k];
            let mut dp = vec![Complex64::default(); k];
            for i in 0..k {
                let rhs = (y[i + 2] - y[i + 1] * 2.0 + y[i]) * (6.0 / (h * h));
                let (prev_c, prev_d) = if i == 0 { (0.0, Complex64::default()) } else { (cp[i - 1], dp[i - 1]) };
                let den = 4.0 - prev_c;
                cp[i] = 1.0 / den;
                dp[i] = (rhs - prev_d) / den;
            }
            let mut next = Complex64::default();
            for i in (0..k).rev() {
                let v = dp[i] - next * cp[i];
                m2[i + 1] = v;
                next = v;
            }
        }
        Spline { x0, h, y: y.to_vec(), m2 }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let n = self.y.len();
        let t = (x - self.x0) / self.h;
        if !(t >= 0.0) || t > (n - 1) as f64 {
            return Complex64::default();
        }
        let i = (t.floor() as usize).min(n - 2);
        let s = t - i as f64;
        let a = 1.0 - s;
        let h2 = self.h * self.h / 6.0;
        self.y[i] * a + self.y[i + 1] * s
            + (self.m2[i] * (a * a * a - a) + self.m2[i + 1] * (s * s * s - s)) * h2
    }
}

/// Fourth-order central difference `(f₋₂ − 8f₋₁ + 8f₁ − f₂)/(12h)`, zero padded.
pub fn derivative(y: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = y.len() as isize;
    let at = |i: isize| if i < 0 || i >= n { Complex64::default() } else { y[i as usize] };
    (0..n)
        .map(|i| (at(i - 2) - at(i - 1) * 8.0 + at(i + 1) * 8.0 - at(i + 2)) / (12.0 * h))
        .collect()
}
