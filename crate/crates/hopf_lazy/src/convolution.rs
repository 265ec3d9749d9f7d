use crate::linalg::{basis, max_norm, Vector, C};
use crate::module::nonzero;
use crate::{LazyError, ModuleAlgebra, Target};

const ADMISSIBLE_TOL: f64 = 1e-10;
/// Residuals closer than this count as ties; the first pair in `(k, h)` order wins.
const TIE: f64 = 1e-12;

/// Linear map `H → X` stored by its values on the basis of `H`.
#[derive(Debug, Clone, PartialEq)]
pub struct Conv {
    pub target: Target,
    pub values: Vec<Vector>,
}

impl Conv {
    pub fn eval(&self, h: &Vector) -> Vector {
        let mut out = Vector::zeros(self.values[0].len());
        for (i, hi) in h.iter().enumerate() {
            if *hi != C::new(0.0, 0.0) {
                out += &self.values[i] * *hi;
            }
        }
        out
    }

    fn zip(&self, other: &Conv, f: impl Fn(&Vector, &Vector) -> Vector) -> Result<Conv, LazyError> {
        if self.target != other.target {
            return Err(LazyError::TargetMismatch(self.target, other.target));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(Conv { target: self.target, values })
    }

    pub fn add(&self, other: &Conv) -> Result<Conv, LazyError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Conv) -> Result<Conv, LazyError> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: C) -> Conv {
        Conv { target: self.target, values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Max-norm distance over all basis values; `inf` on a target mismatch.
    pub fn distance(&self, other: &Conv) -> f64 {
        match self.sub(other) {
            Ok(d) => d.values.iter().map(max_norm).fold(0.0, f64::max),
            Err(_) => f64::INFINITY,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(max_norm).fold(0.0, f64::max)
    }
}

/// Violations of the lazy Sweedler cocycle conditions.
#[derive(Debug, Clone, Default)]
pub struct SweedlerReport {
    pub unitarity: f64,
    pub unit: f64,
    pub cocycle: f64,
    /// Basis pair `(h, k)` with the largest cocycle residual, scanning `k` in the outer loop.
    pub cocycle_worst: Option<(usize, usize)>,
    pub centralizer: f64,
}

impl SweedlerReport {
    pub fn max(&self) -> f64 {
        [self.unitarity, self.unit, self.cocycle, self.centralizer].into_iter().fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

/// Violations of the lazy Hochschild cocycle conditions.
#[derive(Debug, Clone, Default)]
pub struct HochschildReport {
    pub unit: f64,
    pub self_adjoint: f64,
    pub central: f64,
    pub cocycle: f64,
    pub cocycle_worst: Option<(usize, usize)>,
}

impl HochschildReport {
    pub fn max(&self) -> f64 {
        [self.unit, self.self_adjoint, self.central, self.cocycle].into_iter().fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max() <= tol
    }
}

impl ModuleAlgebra {
    fn dim_of(&self, t: Target) -> Result<usize, LazyError> {
        Ok(self.piece(t)?.dim())
    }

    pub fn conv(&self, target: Target, values: Vec<Vector>) -> Result<Conv, LazyError> {
        let d = self.dim_of(target)?;
        if values.len() != self.hopf.dim() || values.iter().any(|v| v.len() != d) {
            return Err(LazyError::Shape(format!("expected {} values of length {d}", self.hopf.dim())));
        }
        Ok(Conv { target, values })
    }

    pub fn conv_zero(&self, target: Target) -> Result<Conv, LazyError> {
        let d = self.dim_of(target)?;
        Ok(Conv { target, values: vec![Vector::zeros(d); self.hopf.dim()] })
    }

    /// `ε(·)1_B`.
    pub fn conv_unit(&self) -> Conv {
        let values = self.hopf.counit.iter().map(|e| &self.b_unit * *e).collect();
        Conv { target: Target::B, values }
    }

    /// `ρ(x)(h) = x◁h`.
    pub fn rho(&self, target: Target, x: &Vector) -> Result<Conv, LazyError> {
        let p = self.piece(target)?;
        let values = (0..self.hopf.dim()).map(|i| &p.action[i] * x).collect();
        Ok(Conv { target, values })
    }

    /// `(f⋆g)(h) = f(h₁)g(h₂)`.
    pub fn convolve(&self, f: &Conv, g: &Conv) -> Result<Conv, LazyError> {
        let (prod, target) = self.pairing(f.target, g.target)?;
        let dz = prod.dims().2;
        let values = self
            .hopf
            .comul
            .iter()
            .map(|d| {
                let mut out = Vector::zeros(dz);
                for (j, k, w) in nonzero(d) {
                    out += prod.apply(&f.values[j], &g.values[k]) * w;
                }
                out
            })
            .collect();
        Ok(Conv { target, values })
    }

    /// `f*(h) = f(S(h)*)*`.
    pub fn conv_star(&self, f: &Conv) -> Conv {
        let p = self.piece(f.target).expect("element was built against this instance");
        let h = &self.hopf;
        let values = (0..h.dim())
            .map(|i| {
                let arg = h.star_vec(&(&h.antipode * basis(h.dim(), i)));
                p.star_vec(&f.eval(&arg))
            })
            .collect();
        Conv { target: f.target, values }
    }

    fn unitary_defect(&self, u: &Vector) -> f64 {
        let us = self.b.star_vec(u);
        let a = self.b_mul.apply(u, &us) - &self.b_unit;
        let b = self.b_mul.apply(&us, u) - &self.b_unit;
        max_norm(&a).max(max_norm(&b))
    }

    /// Largest `‖x·v − v·x‖` over basis `x` of `X` for an element `v` of `B`.
    fn commutator_defect(&self, v: &Vector, t: Target) -> Result<f64, LazyError> {
        let dim = self.dim_of(t)?;
        let mut worst: f64 = 0.0;
        for x in 0..dim {
            let ex = basis(dim, x);
            let l = self.product(Target::B, v, t, &ex)?;
            let r = self.product(t, &ex, Target::B, v)?;
            worst = worst.max(max_norm(&(l - r)));
        }
        Ok(worst)
    }

    /// Largest `‖b·m − m·b‖` over basis `b` for an element `m` of `X`.
    fn central_defect(&self, m: &Vector, t: Target) -> Result<f64, LazyError> {
        let mut worst: f64 = 0.0;
        for a in 0..self.b.dim() {
            let ea = self.b_basis(a);
            let l = self.product(Target::B, &ea, t, m)?;
            let r = self.product(t, m, Target::B, &ea)?;
            worst = worst.max(max_norm(&(l - r)));
        }
        Ok(worst)
    }

    /// `Dυ(h) = (υ◁h)υ*` for a unitary `υ` centralizing `B ⊕ M`.
    pub fn coboundary_s(&self, upsilon: &Vector) -> Result<Conv, LazyError> {
        let u = self.unitary_defect(upsilon);
        if u > ADMISSIBLE_TOL {
            return Err(LazyError::NotAdmissible(format!("element is not unitary (defect {u:.3e})")));
        }
        let c = self.commutator_defect(upsilon, Target::B)?.max(self.commutator_defect(upsilon, Target::M)?);
        if c > ADMISSIBLE_TOL {
            return Err(LazyError::NotAdmissible(format!("element does not centralize B ⊕ M (defect {c:.3e})")));
        }
        Ok(self.coboundary_s_unchecked(upsilon))
    }

    pub(crate) fn coboundary_s_unchecked(&self, upsilon: &Vector) -> Conv {
        let us = self.b.star_vec(upsilon);
        let values = self.b.action.iter().map(|a| self.b_mul.apply(&(a * upsilon), &us)).collect();
        Conv { target: Target::B, values }
    }

    /// `D(m)(h) = m◁h − mε(h)` for a self-adjoint `B`-central `m`.
    pub fn coboundary_h(&self, m: &Vector) -> Result<Conv, LazyError> {
        let sa = max_norm(&(self.m.star_vec(m) - m));
        if sa > ADMISSIBLE_TOL {
            return Err(LazyError::NotAdmissible(format!("element is not self-adjoint (defect {sa:.3e})")));
        }
        let c = self.central_defect(m, Target::M)?;
        if c > ADMISSIBLE_TOL {
            return Err(LazyError::NotAdmissible(format!("element is not B-central (defect {c:.3e})")));
        }
        self.hochschild_d(Target::M, m)
    }

    /// `D(x)(h) = x◁h − xε(h)` with no admissibility check; used on `Ω²`.
    pub fn hochschild_d(&self, target: Target, x: &Vector) -> Result<Conv, LazyError> {
        let p = self.piece(target)?;
        let values = p.action.iter().zip(self.hopf.counit.iter()).map(|(a, e)| a * x - x * *e).collect();
        Ok(Conv { target, values })
    }

    pub fn check_sweedler(&self, sigma: &Conv) -> Result<SweedlerReport, LazyError> {
        if sigma.target != Target::B {
            return Err(LazyError::TargetMismatch(sigma.target, Target::B));
        }
        let h = &self.hopf;
        let nh = h.dim();
        let mut r = SweedlerReport::default();
        let ss = self.conv_star(sigma);
        let unit = self.conv_unit();
        r.unitarity = self.convolve(sigma, &ss)?.distance(&unit).max(self.convolve(&ss, sigma)?.distance(&unit));
        r.unit = max_norm(&(sigma.eval(&h.unit) - &self.b_unit));
        for k in 0..nh {
            for i in 0..nh {
                let lhs = sigma.eval(&h.mul.basis_product(i, k));
                let mut rhs = Vector::zeros(self.b.dim());
                for (a, c, w) in nonzero(&h.comul[k]) {
                    rhs += self.b_mul.apply(&(&self.b.action[a] * &sigma.values[i]), &sigma.values[c]) * w;
                }
                let e = max_norm(&(lhs - rhs));
                if r.cocycle_worst.is_none() || e > r.cocycle + TIE * r.cocycle.max(1.0) {
                    r.cocycle = r.cocycle.max(e);
                    r.cocycle_worst = Some((i, k));
                }
            }
        }
        // σ(h₁)(x◁h₂) = (x◁h₁)σ(h₂) for x in B and in M
        for t in [Target::B, Target::M] {
            let p = self.piece(t)?;
            for x in 0..p.dim() {
                let ex = basis(p.dim(), x);
                for i in 0..nh {
                    let mut diff = Vector::zeros(p.dim());
                    for (a, c, w) in nonzero(&h.comul[i]) {
                        let l = self.product(Target::B, &sigma.values[a], t, &(&p.action[c] * &ex))?;
                        let rr = self.product(t, &(&p.action[a] * &ex), Target::B, &sigma.values[c])?;
                        diff += (l - rr) * w;
                    }
                    r.centralizer = r.centralizer.max(max_norm(&diff));
                }
            }
        }
        Ok(r)
    }

    pub fn check_hochschild(&self, mu: &Conv) -> Result<HochschildReport, LazyError> {
        let t = mu.target;
        if t == Target::B {
            return Err(LazyError::TargetMismatch(t, Target::M));
        }
        let h = &self.hopf;
        let nh = h.dim();
        let p = self.piece(t)?;
        let mut r = HochschildReport {
            unit: max_norm(&mu.eval(&h.unit)),
            self_adjoint: self.conv_star(mu).distance(mu),
            ..Default::default()
        };
        for k in 0..nh {
            for i in 0..nh {
                let lhs = mu.eval(&h.mul.basis_product(i, k));
                let rhs = &p.action[k] * &mu.values[i] + &mu.values[k] * h.counit[i];
                let e = max_norm(&(lhs - rhs));
                if r.cocycle_worst.is_none() || e > r.cocycle + TIE * r.cocycle.max(1.0) {
                    r.cocycle = r.cocycle.max(e);
                    r.cocycle_worst = Some((i, k));
                }
            }
        }
        // μ(h₁)(b◁h₂) = (b◁h₁)μ(h₂)
        for a in 0..self.b.dim() {
            let ea = self.b_basis(a);
            for i in 0..nh {
                let mut diff = Vector::zeros(p.dim());
                for (j, k, w) in nonzero(&h.comul[i]) {
                    let l = self.product(t, &mu.values[j], Target::B, &(&self.b.action[k] * &ea))?;
                    let rr = self.product(Target::B, &(&self.b.action[j] * &ea), t, &mu.values[k])?;
                    diff += (l - rr) * w;
                }
                r.central = r.central.max(max_norm(&diff));
            }
        }
        Ok(r)
    }

    /// `σ▷μ = σ⋆μ⋆σ*`.
    pub fn conj_action(&self, sigma: &Conv, mu: &Conv) -> Result<Conv, LazyError> {
        let left = self.convolve(sigma, mu)?;
        self.convolve(&left, &self.conv_star(sigma))
    }

    /// Applies `d` valuewise: `B`-valued to `M`-valued, `M`-valued to `Ω²`-valued.
    pub fn d_conv(&self, f: &Conv) -> Result<Conv, LazyError> {
        let target = match f.target {
            Target::B => Target::M,
            Target::M => Target::Two,
            Target::Two => return Err(LazyError::MissingData("third-order data")),
        };
        let values = f.values.iter().map(|v| self.differential(f.target, v)).collect::<Result<_, _>>()?;
        Ok(Conv { target, values })
    }

    /// `MC(σ)(h) = −∂σ(h₁)σ*(h₂)`.
    pub fn mc_cocycle(&self, sigma: &Conv) -> Result<Conv, LazyError> {
        if self.d.is_none() {
            return Err(LazyError::MissingData("derivation d_B"));
        }
        let ds = self.d_conv(sigma)?;
        Ok(self.convolve(&ds, &self.conv_star(sigma))?.scale(C::new(-1.0, 0.0)))
    }

    /// `μ⋆ν + ν⋆μ` for one-form valued elements.
    pub fn graded_bracket(&self, mu: &Conv, nu: &Conv) -> Result<Conv, LazyError> {
        self.convolve(mu, nu)?.add(&self.convolve(nu, mu)?)
    }

    /// `𝓕[μ](h) = −i(dμ(h) + μ(h₁)∧μ(h₂))`.
    pub fn curvature_map(&self, mu: &Conv) -> Result<Conv, LazyError> {
        if mu.target != Target::M {
            return Err(LazyError::TargetMismatch(mu.target, Target::M));
        }
        let dm = self.d_conv(mu)?;
        Ok(dm.add(&self.convolve(mu, mu)?)?.scale(C::new(0.0, -1.0)))
    }
}
