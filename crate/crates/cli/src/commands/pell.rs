use num_bigint::BigInt;
use quad_field::{fundamental_unit, pell_unit, QuadContext, QuadraticIrrational};
use serde_json::json;

use crate::{CliError, Report, RunConfig};

/// Fundamental and Pell units of discriminant `delta`, `Φ(ε)` for the canonical `θ = (b+√Δ)/2`,
/// and a power table.
pub fn cmd_pell(delta: i64, cfg: &RunConfig) -> Result<Report, CliError> {
    let d = BigInt::from(delta);
    let fund = fundamental_unit(&d)?;
    let unit = pell_unit(&d)?;
    let b = delta.rem_euclid(2);
    let theta = QuadraticIrrational::new(1, b, (b * b - delta) / 4)?;
    let ctx = QuadContext::new(theta)?;
    let phi = ctx.power(1).matrix();
    let mut r = Report::new("pell", &["m", "eps^m", "value", "a", "b", "c", "d"]);
    let mut powers = Vec::new();
    for m in -cfg.grades..=cfg.grades {
        let p = ctx.power(m);
        let e = ctx.eps_pow(m);
        r.row(vec![m.to_string(), e.to_string(), format!("{:.12}", e.to_f64()), p.a.to_string(), p.b.to_string(), p.c.to_string(), p.d.to_string()]);
        powers.push(json!({"m": m, "eps_m": e.to_string(), "value": e.to_f64(), "matrix": [[p.a.to_string(), p.b.to_string()], [p.c.to_string(), p.d.to_string()]]}));
    }
    r.passed = phi.fixes(&ctx.theta) && phi.det() == BigInt::from(1);
    r.json = json!({
        "delta": delta,
        "theta": {"a": 1, "b": b, "c": (b * b - delta) / 4, "value": ctx.theta_f64},
        "fundamental_unit": {"u": fund.u.to_string(), "v": fund.v.to_string(), "norm": fund.norm().to_string(), "value": fund.to_string()},
        "pell_unit": {"u": unit.u.to_string(), "v": unit.v.to_string(), "value": unit.to_string(), "float": ctx.eps_f64},
        "phi": [[phi.g11.to_string(), phi.g12.to_string()], [phi.g21.to_string(), phi.g22.to_string()]],
        "powers": powers,
    });
    Ok(r)
}
