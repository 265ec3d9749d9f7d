use std::f64::consts::PI;

use nc_torus::{d_b, d_b1, dtau1, dtau2, vol, wedge, Axis, TorusElement};
use num_complex::Complex64;
use quad_field::QuadContext;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::report::sci;
use crate::{CliError, Report, RunConfig};

pub const DEFAULT_TOL: f64 = 1e-12;

fn sparse(rng: &mut ChaCha8Rng, theta: f64) -> TorusElement {
    let terms: Vec<(i64, i64, Complex64)> = (0..rng.gen_range(1..=4))
        .map(|_| (rng.gen_range(-3..=3), rng.gen_range(-3..=3), Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
        .collect();
    TorusElement::from_terms(theta, &terms)
}

fn mul(a: &TorusElement, b: &TorusElement) -> TorusElement {
    a.multiply(b).expect("same theta")
}

#[derive(Default, Clone, Copy)]
struct Residuals {
    associativity: f64,
    star: f64,
    leibniz: f64,
    d_squared: f64,
}

impl Residuals {
    fn max(self, o: Self) -> Self {
        Residuals {
            associativity: self.associativity.max(o.associativity),
            star: self.star.max(o.star),
            leibniz: self.leibniz.max(o.leibniz),
            d_squared: self.d_squared.max(o.d_squared),
        }
    }
}

fn residuals(x: &TorusElement, y: &TorusElement, z: &TorusElement) -> Residuals {
    let xy = mul(x, y);
    let leibniz = [Axis::One, Axis::Two]
        .iter()
        .map(|&ax| xy.delta(ax).distance(&(&mul(&x.delta(ax), y) + &mul(x, &y.delta(ax)))))
        .fold(0.0, f64::max);
    Residuals {
        associativity: mul(&xy, z).distance(&mul(x, &mul(y, z))),
        star: xy.star().distance(&mul(&y.star(), &x.star())).max(x.star().star().distance(x)),
        leibniz,
        d_squared: d_b1(&d_b(x)).b.max_abs(),
    }
}

/// Seeded random sparse triples through the torus laws and calculus identities.
pub fn cmd_torus_check(pairs: usize, cfg: &RunConfig) -> Result<Report, CliError> {
    let ctx = QuadContext::new(cfg.theta.clone())?;
    let th = ctx.theta_f64;
    let tol = cfg.tol.unwrap_or(DEFAULT_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let samples: Vec<_> = (0..pairs).map(|_| (sparse(&mut rng, th), sparse(&mut rng, th), sparse(&mut rng, th))).collect();
    let res = samples.par_iter().map(|(x, y, z)| residuals(x, y, z)).reduce(Residuals::default, Residuals::max);
    let (u, v) = (TorusElement::u(th), TorusElement::v(th));
    let comm = mul(&v, &u).distance(&mul(&u, &v).scale(Complex64::from_polar(1.0, 2.0 * PI * th)));
    let vol_res = wedge(&dtau1(th), &dtau2(th)).distance(&vol(th));
    let mut r = Report::new("torus-check", &["check", "residual", "tol", "status"]);
    let checks = [
        ("commutation VU = e(θ)UV", comm),
        ("associativity", res.associativity),
        ("star antimultiplicative", res.star),
        ("derivation Leibniz", res.leibniz),
        ("d∘d = 0", res.d_squared),
        ("dτ¹∧dτ² = vol", vol_res),
    ];
    for (name, x) in checks {
        r.check(name, x, tol);
    }
    r.json = json!({
        "theta": cfg.theta_spec,
        "theta_value": th,
        "seed": cfg.seed,
        "pairs": pairs,
        "tol": tol,
        "checks": checks.iter().map(|(n, x)| json!({"check": n, "residual": x, "max_residual": sci(*x), "pass": *x <= tol})).collect::<Vec<_>>(),
    });
    Ok(r)
}
