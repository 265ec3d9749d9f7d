//! The graded products `P_{−m} × P_m → A_θ` and `P_m × P_n → P_{m+n}`.

use nc_torus::{phase, TorusElement};
use num_complex::Complex64;

use crate::element::e;
use crate::{HeisError, HeisenbergElement};

/// Truncation report for a product.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Diagnostics {
    pub warnings: Vec<String>,
    /// Largest relative modulus on the outer samples of the operands.
    pub boundary: f64,
    /// Largest torus coefficient on the edge of the mode box, relative to the largest one.
    pub mode_tail: f64,
}

impl Diagnostics {
    pub fn merge(&mut self, o: Diagnostics) {
        self.warnings.extend(o.warnings);
        self.boundary = self.boundary.max(o.boundary);
        self.mode_tail = self.mode_tail.max(o.mode_tail);
    }

    fn check_operands(&mut self, f: &HeisenbergElement, g: &HeisenbergElement) {
        let tol = f.frame.grid.tol;
        for (name, x) in [("left", f), ("right", g)] {
            let b = x.boundary_mass(4);
            self.boundary = self.boundary.max(b);
            if b > tol {
                self.warnings.push(format!("{name} factor (grade {}) has boundary mass {b:.2e} above tol", x.m));
            }
        }
    }
}

/// `f ∈ P_{−m}`, `g ∈ P_m`: the `(n₁,n₂)` coefficient is
/// `Σ_k ∫ (V^{−n₂}U^{−n₁}·f)(x/ε^m, k) g(x, −a_m k) dx`.
pub(crate) fn pair(f: &HeisenbergElement, g: &HeisenbergElement) -> Result<(TorusElement, Diagnostics), HeisError> {
    if f.m != -g.m || f.m == 0 {
        return Err(HeisError::GradeMismatch(f.m, g.m));
    }
    if f.frame.grid != g.frame.grid {
        return Err(HeisError::GridMismatch);
    }
    let mut diag = Diagnostics::default();
    diag.check_operands(f, g);
    let frame = &g.frame;
    let gr = &frame.grid;
    let cut = gr.mode_cutoff;
    let gm = g.grade_data();
    let fm = f.grade_data();
    let (cf, af) = (fm.c as f64, fm.a);
    let sf = f.sampler();
    let xs = gr.xs();
    let theta = frame.theta;
    let mut out = TorusElement::zero(theta);
    for k in 0..gm.sectors() as i64 {
        let gk = &g.samples[gm.sector(-gm.a * k)];
        for n2 in -cut..=cut {
            // f(x/ε^m + n₂/c', k + n₂a') g(x, −a_m k) on the grid
            let base: Vec<Complex64> = xs
                .iter()
                .zip(gk)
                .map(|(&x, gv)| sf.at(x / gm.e + n2 as f64 / cf, k + n2 * af) * gv)
                .collect();
            for n1 in -cut..=cut {
                let y: Vec<Complex64> = xs
                    .iter()
                    .zip(&base)
                    .map(|(&x, b)| e(-(n1 as f64) * (x - k as f64 / cf)) * b)
                    .collect();
                let v = gr.integrate(&y) * phase(theta, n1 * n2);
                *out.coeffs.entry((n1, n2)).or_default() += v;
            }
        }
    }
    let peak = out.max_abs().max(f64::MIN_POSITIVE);
    let edge = out
        .coeffs
        .iter()
        .filter(|(&(a, b), _)| a.abs() == cut || b.abs() == cut)
        .map(|(_, v)| v.norm())
        .fold(0.0, f64::max);
    diag.mode_tail = edge / peak;
    if diag.mode_tail > gr.tol {
        diag.warnings.push(format!(
            "torus coefficients at mode cutoff {cut} reach {:.2e} of the peak",
            diag.mode_tail
        ));
    }
    Ok((out, diag))
}

/// `f ∈ P_m`, `g ∈ P_n` with `m, n, m+n ≠ 0`:
///
/// ```text
/// (fg)(x,k) = Σ_j f(x/ε^n + ε^m(k d_n/c_m − k/c_{m+n} − j/c_m), d_n k − j)
///               · g(x − k d_{m+n}/c_{m+n} + j/c_n, a_n j)
/// ```
///
/// The sum runs over every `j` for which both arguments can lie in the
/// window, widened by `J` on each side.
pub(crate) fn jsum(f: &HeisenbergElement, g: &HeisenbergElement) -> Result<(HeisenbergElement, Diagnostics), HeisError> {
    if f.m == 0 || g.m == 0 || f.m + g.m == 0 {
        return Err(HeisError::GradeMismatch(f.m, g.m));
    }
    if f.frame.grid != g.frame.grid {
        return Err(HeisError::GridMismatch);
    }
    let mut diag = Diagnostics::default();
    diag.check_operands(f, g);
    let frame = &g.frame;
    let gr = frame.grid;
    let (m, n) = (f.m, g.m);
    let (dm, dn, dmn) = (frame.grade(m), frame.grade(n), frame.grade(m + n));
    let (cm, cn, cmn) = (dm.c as f64, dn.c as f64, dmn.c as f64);
    let (sf, sg) = (f.sampler(), g.sampler());
    let en = dn.e;
    let em = dm.e;
    let l = gr.l;
    let margin = gr.j as f64;
    let out = HeisenbergElement::tabulate(frame, m + n, |x, k| {
        let kf = k as f64;
        let fbase = x / en + em * (kf * dn.d as f64 / cm - kf / cmn);
        let gbase = x - kf * dmn.d as f64 / cmn;
        // |gbase + j/c_n| ≤ L and |fbase − ε^m j/c_m| ≤ L
        let (g0, g1) = ordered(cn * (-l - gbase), cn * (l - gbase));
        let (f0, f1) = ordered(cm / em * (fbase - l), cm / em * (fbase + l));
        let lo = g0.max(f0);
        let hi = g1.min(f1);
        if lo > hi {
            return Complex64::default();
        }
        let j0 = (lo - margin).floor() as i64;
        let j1 = (hi + margin).ceil() as i64;
        let mut acc = Complex64::default();
        for j in j0..=j1 {
            let jf = j as f64;
            let fv = sf.at(fbase - em * jf / cm, dn.d * k - j);
            if fv == Complex64::default() {
                continue;
            }
            acc += fv * sg.at(gbase + jf / cn, dn.a * j);
        }
        acc
    });
    Ok((out, diag))
}

fn ordered(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}
