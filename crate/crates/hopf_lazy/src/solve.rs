use nalgebra::{DMatrix, DVector};

use crate::linalg::{basis, real_nullspace, real_rank, Vector, C};
use crate::module::nonzero;
use crate::{Conv, LazyError, ModuleAlgebra, Target};

const NULL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CohomologyDims {
    pub zh1: usize,
    pub bh1: usize,
    pub hh1: usize,
    /// Real dimension of the self-adjoint `B`-central elements.
    pub ch0: usize,
}

/// Real bases of lazy Hochschild cocycles and coboundaries.
#[derive(Debug, Clone)]
pub struct HochschildSpace {
    pub cocycles: Vec<Conv>,
    pub coboundaries: Vec<Conv>,
    pub dims: CohomologyDims,
}

fn to_real(v: &Vector) -> impl Iterator<Item = f64> + '_ {
    v.iter().flat_map(|c| [c.re, c.im])
}

fn from_real(r: &DVector<f64>) -> Vector {
    Vector::from_fn(r.len() / 2, |i, _| C::new(r[2 * i], r[2 * i + 1]))
}

/// Matrix of a real-linear map `C^n → C^k` given as a closure, acting on interleaved (re, im).
fn real_matrix(n: usize, mut f: impl FnMut(&Vector) -> Vector) -> DMatrix<f64> {
    let cols: Vec<Vec<f64>> = (0..2 * n)
        .map(|j| {
            let mut v = basis(n, j / 2);
            if j % 2 == 1 {
                v *= C::new(0.0, 1.0);
            }
            to_real(&f(&v)).collect()
        })
        .collect();
    let rows = cols.first().map_or(0, |c| c.len());
    DMatrix::from_fn(rows, 2 * n, |i, j| cols[j][i])
}

impl ModuleAlgebra {
    fn split(&self, target: Target, flat: &Vector) -> Result<Conv, LazyError> {
        let nx = self.piece(target)?.dim();
        let values = (0..self.hopf.dim()).map(|i| flat.rows(i * nx, nx).into_owned()).collect();
        Ok(Conv { target, values })
    }

    /// Residuals of the lazy Hochschild conditions, real-linear in `μ`.
    fn hochschild_residual(&self, mu: &Conv) -> Vector {
        let h = &self.hopf;
        let nh = h.dim();
        let t = mu.target;
        let p = self.piece(t).expect("checked target");
        let mut out: Vec<C> = Vec::new();
        out.extend(mu.eval(&h.unit).iter());
        out.extend((self.conv_star(mu).sub(mu).expect("same target")).values.iter().flat_map(|v| v.iter().copied()));
        for i in 0..nh {
            for k in 0..nh {
                let r = mu.eval(&h.mul.basis_product(i, k)) - &p.action[k] * &mu.values[i] - &mu.values[k] * h.counit[i];
                out.extend(r.iter());
            }
        }
        for a in 0..self.b.dim() {
            let ea = self.b_basis(a);
            for i in 0..nh {
                let mut diff = Vector::zeros(p.dim());
                for (j, k, w) in nonzero(&h.comul[i]) {
                    let l = self.product(t, &mu.values[j], Target::B, &(&self.b.action[k] * &ea)).expect("bimodule");
                    let r = self.product(Target::B, &(&self.b.action[j] * &ea), t, &mu.values[k]).expect("bimodule");
                    diff += (l - r) * w;
                }
                out.extend(diff.iter());
            }
        }
        Vector::from_vec(out)
    }

    /// Self-adjoint `B`-central elements of the target, as a real basis.
    pub fn central_self_adjoint(&self, target: Target) -> Result<Vec<Vector>, LazyError> {
        let p = self.piece(target)?;
        let nx = p.dim();
        let mut failure = None;
        let a = real_matrix(nx, |m| {
            let mut out: Vec<C> = (p.star_vec(m) - m).iter().copied().collect();
            for b in 0..self.b.dim() {
                let eb = self.b_basis(b);
                match (self.product(Target::B, &eb, target, m), self.product(target, m, Target::B, &eb)) {
                    (Ok(l), Ok(r)) => out.extend((l - r).iter()),
                    (Err(e), _) | (_, Err(e)) => failure = Some(e.to_string()),
                }
            }
            Vector::from_vec(out)
        });
        if let Some(e) = failure {
            return Err(LazyError::Shape(e));
        }
        Ok(real_nullspace(&a, NULL_TOL).iter().map(from_real).collect())
    }

    /// Solves the lazy Hochschild conditions as a real-linear system.
    pub fn solve_hochschild_space(&self, target: Target) -> Result<HochschildSpace, LazyError> {
        if target == Target::B {
            return Err(LazyError::TargetMismatch(Target::B, Target::M));
        }
        let nx = self.piece(target)?.dim();
        let n = self.hopf.dim() * nx;
        let a = real_matrix(n, |flat| {
            let mu = self.split(target, flat).expect("flat vector has the right length");
            self.hochschild_residual(&mu)
        });
        let cocycles = real_nullspace(&a, NULL_TOL)
            .iter()
            .map(|v| self.split(target, &from_real(v)))
            .collect::<Result<Vec<_>, _>>()?;
        let central = self.central_self_adjoint(target)?;
        let images = central.iter().map(|m| self.hochschild_d(target, m)).collect::<Result<Vec<_>, _>>()?;
        let flat: Vec<Vec<f64>> =
            images.iter().map(|c| c.values.iter().flat_map(|v| to_real(v).collect::<Vec<_>>()).collect()).collect();
        let img = DMatrix::from_fn(2 * n, flat.len(), |i, j| flat[j][i]);
        let bh1 = real_rank(&img, NULL_TOL);
        let coboundaries = if flat.is_empty() {
            Vec::new()
        } else {
            let svd = img.svd(true, false);
            let u = svd.u.expect("requested U");
            (0..svd.singular_values.len())
                .filter(|&k| svd.singular_values[k] > NULL_TOL)
                .map(|k| self.split(target, &from_real(&u.column(k).into_owned())))
                .collect::<Result<Vec<_>, _>>()?
        };
        let zh1 = cocycles.len();
        Ok(HochschildSpace {
            dims: CohomologyDims { zh1, bh1, hh1: zh1.saturating_sub(bh1), ch0: central.len() },
            cocycles,
            coboundaries,
        })
    }
}

/// Real inner product on interleaved coordinates.
fn real_dot(a: &Vector, b: &Vector) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.re * y.re + x.im * y.im).sum()
}

impl ModuleAlgebra {
    /// Multiplication table when `H` is a group algebra on its basis (every basis vector group-like).
    pub fn group_table(&self) -> Option<Vec<Vec<usize>>> {
        let h = &self.hopf;
        let n = h.dim();
        let is = |v: &Vector, i: usize| v.iter().enumerate().all(|(k, c)| (*c - if k == i { 1.0 } else { 0.0 }).norm() <= 1e-12);
        for i in 0..n {
            let d = &h.comul[i];
            let diag = (0..n).all(|j| (0..n).all(|k| (d[(j, k)] - if j == i && k == i { 1.0 } else { 0.0 }).norm() <= 1e-12));
            if !diag || (h.counit[i] - 1.0).norm() > 1e-12 {
                return None;
            }
        }
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for k in 0..n {
                let p = h.mul.basis_product(i, k);
                table[i][k] = (0..n).find(|&j| is(&p, j))?;
            }
        }
        Some(table)
    }

    /// Ordinary group cohomology `Z¹(G, V)`, `B¹(G, V)` with `V = Z_B(M)_sa`, computed on group
    /// elements only. `None` unless `H` is a group algebra.
    pub fn group_cohomology(&self, target: Target) -> Result<Option<CohomologyDims>, LazyError> {
        let Some(table) = self.group_table() else { return Ok(None) };
        let n = table.len();
        let p = self.piece(target)?;
        let v = self.central_self_adjoint(target)?;
        let dv = v.len();
        // act[k][(a, b)]: coordinate a of v_b ◁ g_k
        let act: Vec<DMatrix<f64>> = (0..n)
            .map(|k| DMatrix::from_fn(dv, dv, |a, b| real_dot(&v[a], &(&p.action[k] * &v[b]))))
            .collect();
        let unknowns = n * dv;
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for j in 0..n {
            for k in 0..n {
                for a in 0..dv {
                    let mut row = vec![0.0; unknowns];
                    row[table[j][k] * dv + a] += 1.0;
                    for b in 0..dv {
                        row[j * dv + b] -= act[k][(a, b)];
                    }
                    row[k * dv + a] -= 1.0;
                    rows.push(row);
                }
            }
        }
        let a = DMatrix::from_fn(rows.len(), unknowns, |i, j| rows[i][j]);
        let zh1 = unknowns - real_rank(&a, NULL_TOL);
        let img = DMatrix::from_fn(n * dv, dv, |i, b| act[i / dv][(i % dv, b)] - if i % dv == b { 1.0 } else { 0.0 });
        let bh1 = real_rank(&img, NULL_TOL);
        Ok(Some(CohomologyDims { zh1, bh1, hh1: zh1.saturating_sub(bh1), ch0: dv }))
    }
}
