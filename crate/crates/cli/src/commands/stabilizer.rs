use num_bigint::BigInt;
use quad_field::{phi_inverse, QuadContext};
use serde_json::json;

use crate::report::verdict;
use crate::{CliError, Report, RunConfig};

/// Exact checks on `Φ`: it stabilizes `θ`, is a homomorphism on powers, inverts to `ε^m`,
/// and `c_{m+n} = c_m ε^{−n} + ε^m c_n`.
pub fn cmd_stabilizer(cfg: &RunConfig) -> Result<Report, CliError> {
    let ctx = QuadContext::new(cfg.theta.clone())?;
    let big_m = cfg.grades;
    let phi1 = ctx.power(1).matrix();
    let mut r = Report::new("stabilizer", &["m", "a", "b", "c", "d", "fixes_theta", "homomorphism", "inverse", "c_cocycle"]);
    let mut table = Vec::new();
    for m in -big_m..=big_m {
        let p = ctx.power(m);
        let g = p.matrix();
        let fixes = g.fixes(&ctx.theta) && g.det() == BigInt::from(1);
        let hom = g == phi1.pow(m) && (-big_m..=big_m).all(|n| ctx.power(m + n).matrix() == g.mul(&ctx.power(n).matrix()));
        let inverse = phi_inverse(&g, &ctx.theta).map(|e| e == ctx.eps_pow(m)).unwrap_or(false);
        let cocycle = (-big_m..=big_m).all(|n| ctx.c(m + n) == &(&ctx.c(m) * &ctx.eps_pow(-n)) + &(&ctx.eps_pow(m) * &ctx.c(n)));
        r.passed &= fixes && hom && inverse && cocycle;
        r.row(vec![
            m.to_string(),
            p.a.to_string(),
            p.b.to_string(),
            p.c.to_string(),
            p.d.to_string(),
            verdict(fixes).into(),
            verdict(hom).into(),
            verdict(inverse).into(),
            verdict(cocycle).into(),
        ]);
        table.push(json!({"m": m, "matrix": [[p.a.to_string(), p.b.to_string()], [p.c.to_string(), p.d.to_string()]],
            "fixes_theta": fixes, "homomorphism": hom, "inverse": inverse, "c_cocycle": cocycle}));
    }
    r.json = json!({"theta": cfg.theta_spec, "theta_value": ctx.theta_f64, "epsilon": ctx.eps.to_string(), "powers": table});
    Ok(r)
}
