use std::path::Path;

use hopf_lazy::instances::{cayley, character, dual_numbers, shift, shift_trivial};
use hopf_lazy::{matrix_distance, Conv, LazyError, ModuleAlgebra, Target, Vector, C};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::{CliError, Report, RunConfig};

pub const GATE_TOL: f64 = 1e-12;
pub const DEFAULT_TOL: f64 = 1e-10;

/// An instance file, or one of `shift-N`, `shift-trivial-N`, `cayley-N`, `dual-numbers`.
pub fn resolve_instance(spec: &str) -> Result<ModuleAlgebra, CliError> {
    let path = Path::new(spec);
    if path.exists() {
        return Ok(ModuleAlgebra::load(path)?);
    }
    let size = |rest: &str| -> Result<usize, CliError> {
        match rest.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Config(format!("bad instance size in {spec:?}"))),
        }
    };
    if spec == "dual-numbers" {
        Ok(dual_numbers())
    } else if let Some(n) = spec.strip_prefix("shift-trivial-") {
        Ok(shift_trivial(size(n)?))
    } else if let Some(n) = spec.strip_prefix("shift-") {
        Ok(shift(size(n)?))
    } else if let Some(n) = spec.strip_prefix("cayley-") {
        Ok(cayley(size(n)?))
    } else {
        Err(CliError::Config(format!("no instance file or builtin named {spec:?}")))
    }
}

fn random_conv(alg: &ModuleAlgebra, target: Target, rng: &mut ChaCha8Rng) -> Result<Conv, LazyError> {
    let dim = alg.piece(target)?.dim();
    let values = (0..alg.hopf.dim())
        .map(|_| Vector::from_fn(dim, |_, _| C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
        .collect();
    alg.conv(target, values)
}

fn real_combination(basis: &[Vector], rng: &mut ChaCha8Rng) -> Option<Vector> {
    let mut it = basis.iter();
    let first = it.next()?;
    Some(it.fold(first * C::new(rng.gen_range(-1.0..1.0), 0.0), |acc, v| acc + v * C::new(rng.gen_range(-1.0..1.0), 0.0)))
}

/// `exp(i·L_h)·1` for self-adjoint central `h`, a unitary of `B`.
fn exp_i(alg: &ModuleAlgebra, h: &Vector) -> Vector {
    let nb = alg.b.dim();
    let mut l = hopf_lazy::Matrix::zeros(nb, nb);
    for j in 0..nb {
        l.set_column(j, &alg.b_mul.apply(h, &alg.b_basis(j)));
    }
    (l * C::new(0.0, 1.0)).exp() * &alg.b_unit
}

struct Gauge {
    label: String,
    sigma: Conv,
    /// The unitary when `sigma = Dυ`.
    upsilon: Option<Vector>,
}

/// Characters on group algebras plus coboundaries of central unitaries, kept when admissible.
fn gauge_candidates(alg: &ModuleAlgebra, rng: &mut ChaCha8Rng) -> Result<Vec<Gauge>, LazyError> {
    let mut out = Vec::new();
    if alg.group_table().is_some() {
        for k in 0..alg.hopf.dim() as i64 {
            out.push(Gauge { label: format!("character k={k}"), sigma: character(alg, k), upsilon: None });
        }
    }
    let central = alg.central_self_adjoint(Target::B)?;
    for j in 0..3 {
        let Some(h) = real_combination(&central, rng) else { break };
        let u = exp_i(alg, &(h * C::new(2.0, 0.0)));
        if let Ok(sigma) = alg.coboundary_s(&u) {
            out.push(Gauge { label: format!("coboundary #{j}"), sigma, upsilon: Some(u) });
        }
    }
    Ok(out)
}

fn dims_json(d: &hopf_lazy::CohomologyDims) -> Value {
    json!({"ZH1": d.zh1, "BH1": d.bh1, "HH1": d.hh1, "center_sa": d.ch0})
}

/// Hopf axiom gate, HH¹ dimensions against group cohomology, cocycle checks, the Maurer–Cartan
/// table, `Op` identities and, with second-order data, the curvature identities.
pub fn cmd_cohomology(instance: &str, cfg: &RunConfig) -> Result<Report, CliError> {
    let alg = resolve_instance(instance)?;
    let tol = cfg.tol.unwrap_or(DEFAULT_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut r = Report::new("cohomology", &["check", "residual", "tol", "status"]);
    let mut doc = json!({"instance": instance, "name": alg.name, "hopf_dim": alg.hopf.dim(), "b_dim": alg.b.dim(), "m_dim": alg.m.dim(), "tol": tol});

    let hopf = alg.hopf.axioms();
    doc["hopf_gate"] = json!({
        "associativity": hopf.associativity, "unit": hopf.unit, "coassociativity": hopf.coassociativity,
        "counit": hopf.counit, "antipode": hopf.antipode, "bialgebra": hopf.bialgebra, "star": hopf.star,
    });
    if !r.check("hopf axiom gate", hopf.max(), GATE_TOL) {
        r.json = doc;
        return Ok(r);
    }
    let module = alg.axioms();
    r.check("module algebra axioms", module.max(), tol);

    // HH¹ against the group-cohomology enumerator
    let mut targets = vec![Target::M];
    if alg.second.is_some() {
        targets.push(Target::Two);
    }
    let mut dims = serde_json::Map::new();
    let mut spaces = Vec::new();
    for &t in &targets {
        let space = alg.solve_hochschild_space(t)?;
        let group = alg.group_cohomology(t)?;
        let key = format!("{t:?}");
        if let Some(g) = &group {
            r.check(&format!("HH1 dims {key} vs group cocycles"), if *g == space.dims { 0.0 } else { 1.0 }, 0.0);
        }
        let worst = space
            .cocycles
            .iter()
            .chain(&space.coboundaries)
            .map(|mu| alg.check_hochschild(mu).map(|h| h.max()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .fold(0.0, f64::max);
        r.check(&format!("solved {key} cocycles satisfy the Hochschild conditions"), worst, tol);
        dims.insert(key, json!({"solved": dims_json(&space.dims), "group": group.as_ref().map(dims_json)}));
        spaces.push((t, space));
    }
    doc["dims"] = Value::Object(dims);

    let gauges = gauge_candidates(&alg, &mut rng)?;
    let mut gauge_json = Vec::new();
    let mut admissible = Vec::new();
    for g in gauges {
        let rep = alg.check_sweedler(&g.sigma)?;
        gauge_json.push(json!({"sigma": g.label, "unitarity": rep.unitarity, "unit": rep.unit, "cocycle": rep.cocycle, "centralizer": rep.centralizer}));
        if rep.passes(tol) {
            admissible.push(g);
        }
    }
    doc["sweedler"] = Value::Array(gauge_json);
    r.check("admissible Sweedler cocycles found", if admissible.is_empty() { 1.0 } else { 0.0 }, 0.0);

    // Op on gauge transformations
    let op: Vec<f64> = admissible.par_iter().map(|g| alg.check_op_gauge(&g.sigma).map(|x| x.max())).collect::<Result<_, _>>()?;
    r.check("Op(σ) is a *-automorphism fixing B", op.into_iter().fold(0.0, f64::max), tol);
    let pairs: Vec<(usize, usize)> = (0..admissible.len()).flat_map(|i| (0..admissible.len()).map(move |j| (i, j))).collect();
    let hom: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (s, t) = (&admissible[i].sigma, &admissible[j].sigma);
            Ok(matrix_distance(&alg.op_gauge(&alg.convolve(s, t)?)?, &(alg.op_gauge(s)? * alg.op_gauge(t)?)))
        })
        .collect::<Result<_, LazyError>>()?;
    r.check("Op(σ⋆τ) = Op(σ)Op(τ)", hom.into_iter().fold(0.0, f64::max), tol);
    let inner = admissible
        .iter()
        .filter_map(|g| g.upsilon.as_ref().map(|u| Ok(matrix_distance(&alg.op_gauge(&g.sigma)?, &alg.ad_unitary(u)?))))
        .collect::<Result<Vec<_>, LazyError>>()?;
    if !inner.is_empty() {
        r.check("Op(Dυ) = Ad_υ", inner.into_iter().fold(0.0, f64::max), tol);
    }

    if alg.d.is_some() {
        let mc: Vec<Conv> = admissible.iter().map(|g| alg.mc_cocycle(&g.sigma)).collect::<Result<_, _>>()?;
        let mut table = Vec::new();
        let mut worst_cross: f64 = 0.0;
        for (i, g) in admissible.iter().enumerate() {
            let is_cocycle = alg.check_hochschild(&mc[i])?.max();
            let mut cross: f64 = 0.0;
            for (j, t) in admissible.iter().enumerate() {
                let lhs = alg.mc_cocycle(&alg.convolve(&g.sigma, &t.sigma)?)?;
                let rhs = mc[i].add(&alg.conj_action(&g.sigma, &mc[j])?)?;
                cross = cross.max(lhs.distance(&rhs));
            }
            worst_cross = worst_cross.max(cross);
            let cobdry = match &g.upsilon {
                Some(u) => {
                    let du = alg.differential(Target::B, u)?;
                    let m = -alg.b_mul.apply(&du, &alg.b.star_vec(u));
                    Some(mc[i].distance(&alg.hochschild_d(Target::M, &m)?))
                }
                None => None,
            };
            r.check(&format!("MC({}) is a Hochschild cocycle", g.label), is_cocycle, tol);
            if let Some(c) = cobdry {
                r.check(&format!("MC({}) = D(−dυ·υ*)", g.label), c, tol);
            }
            table.push(json!({"sigma": g.label, "mc_norm": mc[i].max_abs(), "hochschild": is_cocycle, "crossed_homomorphism": cross, "coboundary": cobdry}));
        }
        r.check("MC(σ⋆τ) = MC(σ) + σ▷MC(τ)", worst_cross, tol);
        doc["mc_table"] = Value::Array(table);

        // potentials from solved cocycles, moved by every gauge transformation
        let m_space = &spaces[0].1;
        let mut mus = Vec::new();
        if let Some(v) = real_combination(&m_space.cocycles.iter().map(|c| Vector::from_iterator(c.values.iter().map(|x| x.len()).sum(), c.values.iter().flat_map(|x| x.iter().copied()))).collect::<Vec<_>>(), &mut rng) {
            let dim = alg.m.dim();
            let values = (0..alg.hopf.dim()).map(|h| v.rows(h * dim, dim).into_owned()).collect();
            mus.push(alg.conv(Target::M, values)?);
        }
        let central_m = alg.central_self_adjoint(Target::M)?;
        if let Some(a) = real_combination(&central_m, &mut rng) {
            mus.push(alg.coboundary_h(&a)?);
        }
        let pot = mus.iter().map(|mu| alg.check_op_potential(mu).map(|x| x.max())).collect::<Result<Vec<_>, _>>()?;
        r.check("Op(μ) is a covariant *-derivation", pot.into_iter().fold(0.0, f64::max), tol);
        let mut act: f64 = 0.0;
        for mu in &mus {
            let op_mu = alg.op_potential(mu)?;
            for g in &admissible {
                let lhs = alg.gauge_act_on_potential(&g.sigma, &op_mu)?;
                let moved = alg.conj_action(&g.sigma, mu)?.add(&alg.mc_cocycle(&g.sigma)?)?;
                act = act.max(matrix_distance(&lhs, &alg.op_potential(&moved)?));
            }
        }
        r.check("Op(σ)▷Op(μ) = Op(σ▷μ + MC(σ))", act, tol);

        if alg.second.is_some() {
            let mut cob: f64 = 0.0;
            for a in central_m.iter().take(4) {
                let lhs = alg.curvature_map(&alg.coboundary_h(a)?)?;
                let da = alg.differential(Target::M, a)? * C::new(0.0, -1.0);
                cob = cob.max(lhs.distance(&alg.hochschild_d(Target::Two, &da)?));
            }
            r.check("F(Dα) = D(−i dα)", cob, tol);
            let mu = random_conv(&alg, Target::M, &mut rng)?;
            let nu = random_conv(&alg, Target::M, &mut rng)?;
            let f = |x: &Conv| alg.curvature_map(x);
            let defect = f(&mu.add(&nu)?)?.sub(&f(&mu)?)?.sub(&f(&nu)?)?;
            let bracket = alg.graded_bracket(&mu, &nu)?.scale(C::new(0.0, -1.0));
            r.check("F(μ+ν) − F(μ) − F(ν) = −i[μ,ν]", defect.distance(&bracket), tol);
            let mut eqv: f64 = 0.0;
            for mu in &mus {
                for g in &admissible {
                    let moved = alg.conj_action(&g.sigma, mu)?.add(&alg.mc_cocycle(&g.sigma)?)?;
                    eqv = eqv.max(f(&moved)?.distance(&alg.conj_action(&g.sigma, &f(mu)?)?));
                }
            }
            r.check("F(σ▷μ + MC(σ)) = σ▷F(μ)", eqv, tol);
        }
    }
    r.json = doc;
    Ok(r)
}
