//! The crossed product `P = H ⊗ B` with product `(h⊗b)(h'⊗b') = hh'₁ ⊗ (b◁h'₂)b'`,
//! its form modules `H ⊗ M`, `H ⊗ Ω²`, and the `Op` realisations of cocycles.

use crate::linalg::{basis, max_norm, Matrix, Vector, C};
use crate::module::nonzero;
use crate::{Conv, LazyError, ModuleAlgebra, Target};

/// Violations of the *-automorphism properties of `Op(σ)`.
#[derive(Debug, Clone, Default)]
pub struct OpGaugeReport {
    pub multiplicative: f64,
    pub star: f64,
    pub fixes_b: f64,
    pub forms_bimodule: f64,
    /// `Op(σ)_* ∘ Op(σ*)_* = id` on one-forms.
    pub inverse: f64,
    /// Multiplicativity on wedges; zero when no second-order data is present.
    pub degree_two: f64,
}

impl OpGaugeReport {
    pub fn max(&self) -> f64 {
        [self.multiplicative, self.star, self.fixes_b, self.forms_bimodule, self.inverse, self.degree_two]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

/// Violations of the covariant *-derivation properties of `Op(μ)`.
#[derive(Debug, Clone, Default)]
pub struct OpPotentialReport {
    pub leibniz: f64,
    pub star: f64,
    pub restricts: f64,
    pub covariance: f64,
}

impl OpPotentialReport {
    pub fn max(&self) -> f64 {
        [self.leibniz, self.star, self.restricts, self.covariance].into_iter().fold(0.0, f64::max)
    }
}

fn nz(v: &Vector) -> impl Iterator<Item = (usize, C)> + '_ {
    v.iter().enumerate().filter(|(_, c)| **c != C::new(0.0, 0.0)).map(|(i, c)| (i, *c))
}

impl ModuleAlgebra {
    pub fn cp_dim(&self, t: Target) -> Result<usize, LazyError> {
        Ok(self.hopf.dim() * self.piece(t)?.dim())
    }

    pub fn cp_unit(&self) -> Vector {
        self.hopf.unit.kronecker(&self.b_unit)
    }

    /// `h ⊗ x`.
    pub fn cp_elem(&self, h: &Vector, x: &Vector) -> Vector {
        h.kronecker(x)
    }

    /// `(h⊗x)(h'⊗y) = hh'₁ ⊗ (x◁h'₂)y`.
    pub fn cp_mul(&self, xt: Target, u: &Vector, yt: Target, v: &Vector) -> Result<Vector, LazyError> {
        let h = &self.hopf;
        let nh = h.dim();
        let (px, py) = (self.piece(xt)?, self.piece(yt)?);
        let (prod, zt) = self.pairing(xt, yt)?;
        let nz_dim = self.piece(zt)?.dim();
        let comul: Vec<_> = h.comul.iter().map(nonzero).collect();
        let mut out = Vector::zeros(nh * nz_dim);
        let mut z = Vector::zeros(nz_dim);
        for (ui, uc) in nz(u) {
            let (i, a) = (ui / px.dim(), ui % px.dim());
            for (vj, vc) in nz(v) {
                let (j, c) = (vj / py.dim(), vj % py.dim());
                for &(j1, j2, w) in &comul[j] {
                    // (e_a ◁ h'₂) e_c, read off columns
                    z.fill(C::new(0.0, 0.0));
                    for (a2, xc) in px.action[j2].column(a).iter().enumerate() {
                        if *xc != C::new(0.0, 0.0) {
                            z.axpy(*xc, &prod.maps[a2].column(c), C::new(1.0, 0.0));
                        }
                    }
                    let coef = uc * vc * w;
                    for (k, hc) in h.mul.maps[i].column(j1).iter().enumerate() {
                        if *hc != C::new(0.0, 0.0) {
                            out.rows_mut(k * nz_dim, nz_dim).axpy(coef * *hc, &z, C::new(1.0, 0.0));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(h⊗x)* = h₁* ⊗ x*◁h₂*`.
    pub fn cp_star(&self, t: Target, u: &Vector) -> Result<Vector, LazyError> {
        let h = &self.hopf;
        let p = self.piece(t)?;
        let mut out = Vector::zeros(h.dim() * p.dim());
        for (ui, uc) in nz(u) {
            let (i, a) = (ui / p.dim(), ui % p.dim());
            let xs = p.star_vec(&basis(p.dim(), a));
            for (j, k, w) in nonzero(&h.comul[i]) {
                let hj = h.star.column(j).into_owned();
                let hk = h.star.column(k).into_owned();
                out += hj.kronecker(&p.act(&xs, &hk)) * (uc * w).conj();
            }
        }
        Ok(out)
    }

    /// `h⊗x ↦ h₁ ⊗ σ(h₂)x` on `H ⊗ X`.
    pub fn op_gauge_on(&self, sigma: &Conv, t: Target) -> Result<Matrix, LazyError> {
        if sigma.target != Target::B {
            return Err(LazyError::TargetMismatch(sigma.target, Target::B));
        }
        let h = &self.hopf;
        let nx = self.piece(t)?.dim();
        let n = h.dim() * nx;
        let mut m = Matrix::zeros(n, n);
        for i in 0..h.dim() {
            for x in 0..nx {
                let mut col = Vector::zeros(n);
                for (j, k, w) in nonzero(&h.comul[i]) {
                    let y = self.product(Target::B, &sigma.values[k], t, &basis(nx, x))?;
                    col += basis(h.dim(), j).kronecker(&y) * w;
                }
                m.set_column(i * nx + x, &col);
            }
        }
        Ok(m)
    }

    /// `Op(σ)` on the crossed product.
    pub fn op_gauge(&self, sigma: &Conv) -> Result<Matrix, LazyError> {
        self.op_gauge_on(sigma, Target::B)
    }

    /// `Op(μ)(h⊗b) = h ⊗ d(b) + h₁ ⊗ μ(h₂)b`, a map `H⊗B → H⊗M`.
    pub fn op_potential(&self, mu: &Conv) -> Result<Matrix, LazyError> {
        if mu.target != Target::M {
            return Err(LazyError::TargetMismatch(mu.target, Target::M));
        }
        let h = &self.hopf;
        let (nb, nm) = (self.b.dim(), self.m.dim());
        let mut m = Matrix::zeros(h.dim() * nm, h.dim() * nb);
        for i in 0..h.dim() {
            let hi = basis(h.dim(), i);
            for a in 0..nb {
                let ea = basis(nb, a);
                let mut col = hi.kronecker(&self.differential(Target::B, &ea)?);
                for (j, k, w) in nonzero(&h.comul[i]) {
                    col += basis(h.dim(), j).kronecker(&self.right.apply(&mu.values[k], &ea)) * w;
                }
                m.set_column(i * nb + a, &col);
            }
        }
        Ok(m)
    }

    /// `x ↦ υxυ*` on the crossed product.
    pub fn ad_unitary(&self, upsilon: &Vector) -> Result<Matrix, LazyError> {
        let u = self.cp_elem(&self.hopf.unit, upsilon);
        let us = self.cp_star(Target::B, &u)?;
        let n = self.cp_dim(Target::B)?;
        let mut m = Matrix::zeros(n, n);
        for c in 0..n {
            let left = self.cp_mul(Target::B, &u, Target::B, &basis(n, c))?;
            m.set_column(c, &self.cp_mul(Target::B, &left, Target::B, &us)?);
        }
        Ok(m)
    }

    /// `Op(σ)_* ∘ ∇ ∘ Op(σ)⁻¹` with `Op(σ)⁻¹ = Op(σ*)`.
    pub fn gauge_act_on_potential(&self, sigma: &Conv, nabla: &Matrix) -> Result<Matrix, LazyError> {
        let fwd = self.op_gauge_on(sigma, Target::M)?;
        let back = self.op_gauge(&self.conv_star(sigma))?;
        Ok(fwd * nabla * back)
    }

    pub fn check_op_gauge(&self, sigma: &Conv) -> Result<OpGaugeReport, LazyError> {
        let mut r = OpGaugeReport::default();
        let op = self.op_gauge(sigma)?;
        let op1 = self.op_gauge_on(sigma, Target::M)?;
        let np = op.ncols();
        let n1 = op1.ncols();
        let e = |n, i| basis(n, i);
        let col = |m: &Matrix, i: usize| m.column(i).into_owned();
        let gap = |a: Vector, b: Vector| max_norm(&(a - b));
        for x in 0..np {
            let ex = e(np, x);
            let ox = col(&op, x);
            r.star = r.star.max(gap(sparse_apply(&op, &self.cp_star(Target::B, &ex)?), self.cp_star(Target::B, &ox)?));
            for y in 0..np {
                let lhs = sparse_apply(&op, &self.cp_mul(Target::B, &ex, Target::B, &e(np, y))?);
                let rhs = self.cp_mul(Target::B, &ox, Target::B, &col(&op, y))?;
                r.multiplicative = r.multiplicative.max(gap(lhs, rhs));
            }
            for w in 0..n1 {
                let ew = e(n1, w);
                let ow = col(&op1, w);
                let lhs = sparse_apply(&op1, &self.cp_mul(Target::B, &ex, Target::M, &ew)?);
                let rhs = self.cp_mul(Target::B, &ox, Target::M, &ow)?;
                r.forms_bimodule = r.forms_bimodule.max(gap(lhs, rhs));
                let lhs = sparse_apply(&op1, &self.cp_mul(Target::M, &ew, Target::B, &ex)?);
                let rhs = self.cp_mul(Target::M, &ow, Target::B, &ox)?;
                r.forms_bimodule = r.forms_bimodule.max(gap(lhs, rhs));
            }
        }
        for a in 0..self.b.dim() {
            let x = self.cp_elem(&self.hopf.unit, &self.b_basis(a));
            r.fixes_b = r.fixes_b.max(max_norm(&(&op * &x - &x)));
        }
        let back = self.op_gauge_on(&self.conv_star(sigma), Target::M)?;
        r.inverse = (&op1 * back - Matrix::identity(n1, n1)).iter().map(|c| c.norm()).fold(0.0, f64::max);
        if self.second.is_some() {
            let op2 = self.op_gauge_on(sigma, Target::Two)?;
            for w in 0..n1 {
                let ew = e(n1, w);
                let ow = col(&op1, w);
                for v in 0..n1 {
                    let lhs = sparse_apply(&op2, &self.cp_mul(Target::M, &ew, Target::M, &e(n1, v))?);
                    let rhs = self.cp_mul(Target::M, &ow, Target::M, &col(&op1, v))?;
                    r.degree_two = r.degree_two.max(gap(lhs, rhs));
                }
            }
        }
        Ok(r)
    }

    /// `δ(h⊗x) = h₁ ⊗ (h₂⊗x)`, a map `H⊗X → H⊗H⊗X`.
    fn coaction(&self, t: Target) -> Result<Matrix, LazyError> {
        let h = &self.hopf;
        let nx = self.piece(t)?.dim();
        let nh = h.dim();
        let mut m = Matrix::zeros(nh * nh * nx, nh * nx);
        for i in 0..nh {
            for x in 0..nx {
                let mut col = Vector::zeros(nh * nh * nx);
                for (j, k, w) in nonzero(&h.comul[i]) {
                    col += basis(nh, j).kronecker(&basis(nh, k).kronecker(&basis(nx, x))) * w;
                }
                m.set_column(i * nx + x, &col);
            }
        }
        Ok(m)
    }

    pub fn check_op_potential(&self, mu: &Conv) -> Result<OpPotentialReport, LazyError> {
        let mut r = OpPotentialReport::default();
        let nabla = self.op_potential(mu)?;
        let np = nabla.ncols();
        for x in 0..np {
            let ex = basis(np, x);
            let nx = nabla.column(x).into_owned();
            let lhs = sparse_apply(&nabla, &self.cp_star(Target::B, &ex)?);
            r.star = r.star.max(max_norm(&(lhs + self.cp_star(Target::M, &nx)?)));
            for y in 0..np {
                let ey = basis(np, y);
                let lhs = sparse_apply(&nabla, &self.cp_mul(Target::B, &ex, Target::B, &ey)?);
                let rhs = self.cp_mul(Target::M, &nx, Target::B, &ey)?
                    + self.cp_mul(Target::B, &ex, Target::M, &nabla.column(y).into_owned())?;
                r.leibniz = r.leibniz.max(max_norm(&(lhs - rhs)));
            }
        }
        for a in 0..self.b.dim() {
            let eb = self.b_basis(a);
            let lhs = &nabla * self.cp_elem(&self.hopf.unit, &eb);
            let rhs = self.cp_elem(&self.hopf.unit, &self.differential(Target::B, &eb)?);
            r.restricts = r.restricts.max(max_norm(&(lhs - rhs)));
        }
        let nh = self.hopf.dim();
        let id_nabla = Matrix::identity(nh, nh).kronecker(&nabla);
        let lhs = self.coaction(Target::M)? * &nabla;
        let rhs = id_nabla * self.coaction(Target::B)?;
        r.covariance = (lhs - rhs).iter().map(|c| c.norm()).fold(0.0, f64::max);
        Ok(r)
    }
}

/// `m·v`, touching only the columns where `v` is non-zero.
fn sparse_apply(m: &Matrix, v: &Vector) -> Vector {
    let mut out = Vector::zeros(m.nrows());
    for (k, c) in nz(v) {
        out.axpy(c, &m.column(k), C::new(1.0, 0.0));
    }
    out
}

/// Entrywise max-norm distance of two matrices.
pub fn matrix_distance(a: &Matrix, b: &Matrix) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max)
}
