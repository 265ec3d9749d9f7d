use std::f64::consts::PI;
use std::sync::Arc;

use heisenberg::packets::{natural, Packet};
use heisenberg::{Frame, GradedElement, GridSpec, HeisError};
use nc_torus::{Axis, TorusElement};
use num_complex::Complex64;
use quad_field::QuadContext;
use rayon::prelude::*;
use serde_json::json;

use crate::report::sci;
use crate::{CliError, Report, RunConfig};

pub const DEFAULT_TOL: f64 = 1e-5;
/// Associativity is a triple product of interpolated samples and is held to a looser bound.
pub const ASSOC_FACTOR: f64 = 10.0;

/// Wide enough for products of grade ±1 factors and fine enough for fourth-order differences.
pub fn default_grid() -> GridSpec {
    GridSpec { l: 16.0, n: 3072, mode_cutoff: 10, ..GridSpec::default() }
}

fn torus_sample(theta: f64, v: u32) -> TorusElement {
    let s = v as f64;
    let c = Complex64::new;
    TorusElement::from_terms(theta, &[(0, 0, c(0.7, 0.1 * s)), (1, 0, c(0.4, -0.2)), (0, -1, c(0.3 - 0.1 * s, 0.2)), (-1, 1, c(0.1, 0.15))])
}

fn packet(fr: &Arc<Frame>, m: i64, v: u32) -> GradedElement {
    if m == 0 {
        GradedElement::torus(fr, torus_sample(fr.theta, v))
    } else {
        GradedElement::module(natural(fr, m, v))
    }
}

/// Twisted Leibniz `∂(xy) = ∂x·σ(y) + x·∂y` and twisted star `∂(x*) = −σ((∂x)*)`.
fn twists(x: &GradedElement, y: &GradedElement) -> Result<(f64, f64), HeisError> {
    let (mut t1, mut t2): (f64, f64) = (0.0, 0.0);
    for ax in [Axis::One, Axis::Two] {
        let lhs = x.mul(y)?.partial(ax);
        let rhs = x.partial(ax).mul(&y.sigma())?.add(&x.mul(&y.partial(ax))?)?;
        t1 = t1.max(lhs.rel_distance(&rhs)?);
        let lhs = x.star()?.partial(ax);
        let rhs = x.partial(ax).star()?.sigma().scale(Complex64::new(-1.0, 0.0));
        t2 = t2.max(lhs.rel_distance(&rhs)?);
    }
    Ok((t1, t2))
}

fn assoc(fr: &Arc<Frame>, (a, b, c): (i64, i64, i64)) -> Result<f64, HeisError> {
    let (x, y, z) = (packet(fr, a, 0), packet(fr, b, 1), packet(fr, c, 2));
    x.mul(&y)?.mul(&z)?.rel_distance(&x.mul(&y.mul(&z)?)?)
}

/// `⟨f, [∂₁,∂₂]f⟩/⟨f,f⟩` on a width-one packet.
fn commutator_eigenvalue(fr: &Arc<Frame>, m: i64) -> Result<Complex64, HeisError> {
    let f = Packet { width: 1.0, center: 0.2, freq: 0.5, sector_slope: 0.2 }.build(fr, m);
    let c12 = f.partial(Axis::Two).partial(Axis::One).sub(&f.partial(Axis::One).partial(Axis::Two))?;
    Ok(f.inner(&c12)? / f.inner(&f)?)
}

fn or_inf(r: Result<f64, HeisError>) -> f64 {
    r.unwrap_or(f64::INFINITY)
}

pub const TWIST_PAIRS: [(i64, i64); 4] = [(0, 1), (1, 0), (1, 1), (-1, 1)];
pub const ASSOC_TRIPLES: [(i64, i64, i64); 8] =
    [(-1, 1, 1), (1, 1, -1), (1, -1, 1), (0, 1, -1), (1, 0, 1), (-1, 0, 1), (0, 1, 1), (1, -1, -1)];

/// Twisted Leibniz/star suites, module laws, `mul_P` associativity and the `[∂₁,∂₂]` table.
pub fn cmd_verify_heisenberg(cfg: &RunConfig) -> Result<Report, CliError> {
    let ctx = QuadContext::new(cfg.theta.clone())?;
    let grid = cfg.grid.unwrap_or_else(default_grid);
    let fr = Frame::new(ctx.clone(), grid)?;
    let tol = cfg.tol.unwrap_or(DEFAULT_TOL);
    let mut r = Report::new("heisenberg-verify", &["check", "residual", "tol", "status"]);

    let tw: Vec<(f64, f64)> = TWIST_PAIRS
        .par_iter()
        .map(|&(a, b)| twists(&packet(&fr, a, 0), &packet(&fr, b, 1)).unwrap_or((f64::INFINITY, f64::INFINITY)))
        .collect();
    let mut twist_json = Vec::new();
    for (&(a, b), &(t1, t2)) in TWIST_PAIRS.iter().zip(&tw) {
        r.check(&format!("twist1 ({a},{b})"), t1, tol);
        r.check(&format!("twist2 ({a},{b})"), t2, tol);
        twist_json.push(json!({"pair": [a, b], "twist1": t1, "twist2": t2}));
    }

    // bimodule laws: (a·f)·b = a·(f·b) is a product of three, the unit and star laws are not
    let module: Vec<(i64, f64, f64)> = [-2i64, -1, 1, 2]
        .par_iter()
        .map(|&m| {
            let f = packet(&fr, m, 1);
            let (a, b) = (packet(&fr, 0, 0), packet(&fr, 0, 2));
            let one = GradedElement::one(&fr);
            let assoc = || -> Result<f64, HeisError> { a.mul(&f)?.mul(&b)?.rel_distance(&a.mul(&f.mul(&b)?)?) };
            let laws = || -> Result<f64, HeisError> {
                let u = one.mul(&f)?.rel_distance(&f)?.max(f.mul(&one)?.rel_distance(&f)?);
                Ok(u.max(f.star()?.star()?.rel_distance(&f)?))
            };
            (m, or_inf(assoc()), or_inf(laws()))
        })
        .collect();
    for &(m, x, y) in &module {
        r.check(&format!("bimodule associativity P_{m}"), x, tol * ASSOC_FACTOR);
        r.check(&format!("unit and involution P_{m}"), y, tol);
    }

    let asc: Vec<f64> = ASSOC_TRIPLES.par_iter().map(|&t| or_inf(assoc(&fr, t))).collect();
    for (&(a, b, c), &x) in ASSOC_TRIPLES.iter().zip(&asc) {
        r.check(&format!("associativity ({a},{b},{c})"), x, tol * ASSOC_FACTOR);
    }

    let mut eig_json = Vec::new();
    let ms: Vec<i64> = (-cfg.grades..=cfg.grades).filter(|&m| m != 0).collect();
    let eig: Vec<Result<Complex64, HeisError>> = ms.par_iter().map(|&m| commutator_eigenvalue(&fr, m)).collect();
    for (&m, ev) in ms.iter().zip(eig) {
        let expect = Complex64::new(0.0, -2.0 * PI * ctx.eps_pow_f64(-m) * ctx.power(m).c_i64() as f64);
        let rel = ev.as_ref().map(|e| (e - expect).norm() / expect.norm()).unwrap_or(f64::INFINITY);
        r.check(&format!("twist3 eigenvalue m={m}"), rel, tol);
        let (re, im) = ev.map(|e| (e.re, e.im)).unwrap_or((f64::NAN, f64::NAN));
        eig_json.push(json!({"m": m, "measured": [re, im], "expected": [expect.re, expect.im], "rel_error": sci(rel)}));
    }

    r.json = json!({
        "theta": cfg.theta_spec,
        "grid": {"L": grid.l, "N": grid.n, "J": grid.j, "mode_cutoff": grid.mode_cutoff},
        "tol": tol,
        "twists": twist_json,
        "module_laws": module.iter().map(|(m, x, y)| json!({"m": m, "bimodule_associativity": x, "unit_involution": y})).collect::<Vec<_>>(),
        "associativity": ASSOC_TRIPLES.iter().zip(&asc).map(|(t, x)| json!({"grades": [t.0, t.1, t.2], "residual": x})).collect::<Vec<_>>(),
        "commutator_eigenvalues": eig_json,
    });
    Ok(r)
}
