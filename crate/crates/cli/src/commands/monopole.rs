use gauge::{adaptedness_test, relative_adaptedness_test, QCalculus};
use num_complex::Complex64;
use quad_field::QuadContext;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::verdict;
use crate::{CliError, Report, RunConfig};

pub const DEFAULT_TOL: f64 = 1e-8;

/// `eps`, `eps^k`, a rational `a/b` or integer (all exact), or a decimal (float).
pub fn parse_q(token: &str, ctx: &QuadContext) -> Result<(QCalculus, Option<i64>), CliError> {
    let t = token.trim().replace('ε', "eps");
    let bad = || CliError::Config(format!("cannot parse q value {token:?}"));
    if let Some(rest) = t.strip_prefix("eps") {
        let k = if rest.is_empty() { 1 } else { rest.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())? };
        return Ok((QCalculus::eps_power(ctx, k), Some(k)));
    }
    if let Ok(x) = t.parse::<num_rational::BigRational>() {
        return Ok((QCalculus::exact(ctx.rational(x))?, None));
    }
    let x: f64 = t.parse().map_err(|_| bad())?;
    Ok((QCalculus::new(x)?, None))
}

fn cjson(c: Option<Complex64>) -> Value {
    c.map_or(Value::Null, |c| json!([c.re, c.im]))
}

/// q-sweep of (relative) adaptedness. Passes when exactly the `ε²` entries are adapted with
/// constant `−iεc₁` and exactly the `ε` entries are relatively adapted.
pub fn cmd_monopole(cfg: &RunConfig) -> Result<Report, CliError> {
    let ctx = QuadContext::new(cfg.theta.clone())?;
    let tol = cfg.tol.unwrap_or(DEFAULT_TOL);
    let parsed = cfg.q_sweep.iter().map(|t| parse_q(t, &ctx).map(|p| (t.clone(), p))).collect::<Result<Vec<_>, _>>()?;
    let c1 = ctx.power(1).c_i64() as f64;
    let constant = Complex64::new(0.0, -ctx.eps_f64 * c1);
    let results = parsed
        .par_iter()
        .map(|(t, (q, k))| {
            let a = adaptedness_test(&ctx, q, cfg.grades.max(2), tol)?;
            let rel = relative_adaptedness_test(&ctx, q, cfg.grades.max(2), tol)?;
            Ok((t.clone(), q.q, *k, a, rel))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut r = Report::new("monopole", &["q", "q_value", "adapted", "relative_adapted", "constant_re", "constant_im", "expected"]);
    let mut sweep = Vec::new();
    for (t, qv, k, a, rel) in results {
        let want_a = k == Some(2);
        let want_rel = k == Some(1);
        let const_ok = !a.adapted || a.constant.is_some_and(|c| (c - constant).norm() <= 1e-9 * constant.norm());
        let rel_const = Complex64::new(1.0 - ctx.eps_f64, 0.0);
        let rel_ok = !rel.adapted || rel.constant.is_some_and(|c| (c - rel_const).norm() <= 1e-9 * rel_const.norm());
        let ok = a.adapted == want_a && rel.adapted == want_rel && const_ok && rel_ok;
        r.passed &= ok;
        let (re, im) = a.constant.map_or((String::new(), String::new()), |c| (format!("{:.12}", c.re), format!("{:.12}", c.im)));
        r.row(vec![t.clone(), format!("{qv:.12}"), a.adapted.to_string(), rel.adapted.to_string(), re, im, verdict(ok).into()]);
        sweep.push(json!({
            "q": t,
            "q_value": qv,
            "exact": a.exact,
            "adapted": a.adapted,
            "relative_adapted": rel.adapted,
            "constant": cjson(a.constant),
            "relative_constant": cjson(rel.constant),
            "spread": a.spread,
        }));
    }
    r.json = json!({
        "theta": ctx.theta_f64,
        "theta_spec": cfg.theta_spec,
        "epsilon": ctx.eps_f64,
        "c1": c1,
        "curvature_constant": [constant.re, constant.im],
        "grades": cfg.grades,
        "q_sweep": sweep,
    });
    Ok(r)
}
