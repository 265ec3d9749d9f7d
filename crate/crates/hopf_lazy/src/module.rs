use crate::linalg::{antilinear, basis, max_norm, Bilinear, Matrix, Vector, C};
use crate::{FiniteHopf, LazyError};

/// Which coefficient space a convolution element takes values in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Target {
    B,
    M,
    Two,
}

/// A finite-dimensional right `H`-module with an antilinear star.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub labels: Vec<String>,
    pub star: Matrix,
    /// `action[i]` is the matrix of `v ↦ v ◁ e_i`.
    pub action: Vec<Matrix>,
}

impl Piece {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn act(&self, v: &Vector, h: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (i, hi) in h.iter().enumerate() {
            if *hi != C::new(0.0, 0.0) {
                out += (&self.action[i] * v) * *hi;
            }
        }
        out
    }

    pub fn star_vec(&self, v: &Vector) -> Vector {
        antilinear(&self.star, v)
    }
}

/// Degree-two data: `Ω²` as a bimodule, the wedge `M × M → Ω²`, and `d: M → Ω²`.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondOrder {
    pub omega2: Piece,
    pub left: Bilinear,
    pub right: Bilinear,
    pub wedge: Bilinear,
    pub d1: Matrix,
}

/// Right `H`-module *-algebra `B` with an equivariant bimodule `M` of one-forms.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleAlgebra {
    pub name: String,
    pub hopf: FiniteHopf,
    pub b: Piece,
    pub b_mul: Bilinear,
    pub b_unit: Vector,
    pub m: Piece,
    pub left: Bilinear,
    pub right: Bilinear,
    /// `d_B: B → M`; absent means zero.
    pub d: Option<Matrix>,
    pub second: Option<SecondOrder>,
}

/// Largest violation of each module-algebra axiom.
#[derive(Debug, Clone, Default)]
pub struct ModuleReport {
    pub algebra: f64,
    pub action: f64,
    pub bimodule: f64,
    pub derivation: f64,
    pub second_order: f64,
}

impl ModuleReport {
    pub fn max(&self) -> f64 {
        [self.algebra, self.action, self.bimodule, self.derivation, self.second_order].into_iter().fold(0.0, f64::max)
    }
}

impl ModuleAlgebra {
    pub fn piece(&self, t: Target) -> Result<&Piece, LazyError> {
        match t {
            Target::B => Ok(&self.b),
            Target::M => Ok(&self.m),
            Target::Two => self.second.as_ref().map(|s| &s.omega2).ok_or(LazyError::MissingData("second-order data")),
        }
    }

    /// The product `X × Y → Z` and its codomain.
    pub fn pairing(&self, x: Target, y: Target) -> Result<(&Bilinear, Target), LazyError> {
        let two = || self.second.as_ref().ok_or(LazyError::MissingData("second-order data"));
        match (x, y) {
            (Target::B, Target::B) => Ok((&self.b_mul, Target::B)),
            (Target::B, Target::M) => Ok((&self.left, Target::M)),
            (Target::M, Target::B) => Ok((&self.right, Target::M)),
            (Target::M, Target::M) => Ok((&two()?.wedge, Target::Two)),
            (Target::B, Target::Two) => Ok((&two()?.left, Target::Two)),
            (Target::Two, Target::B) => Ok((&two()?.right, Target::Two)),
            _ => Err(LazyError::TargetMismatch(x, y)),
        }
    }

    pub fn product(&self, x: Target, u: &Vector, y: Target, v: &Vector) -> Result<Vector, LazyError> {
        Ok(self.pairing(x, y)?.0.apply(u, v))
    }

    /// `d_B` on `B` and `d` on one-forms.
    pub fn differential(&self, t: Target, v: &Vector) -> Result<Vector, LazyError> {
        match t {
            Target::B => Ok(match &self.d {
                Some(d) => d * v,
                None => Vector::zeros(self.m.dim()),
            }),
            Target::M => Ok(&self.second.as_ref().ok_or(LazyError::MissingData("second-order data"))?.d1 * v),
            Target::Two => Err(LazyError::MissingData("third-order data")),
        }
    }

    pub fn b_basis(&self, a: usize) -> Vector {
        basis(self.b.dim(), a)
    }

    /// Checks the *-algebra, module-algebra, bimodule and derivation axioms on basis elements.
    pub fn axioms(&self) -> ModuleReport {
        let mut r = ModuleReport::default();
        let upd = |x: &mut f64, v: f64| *x = x.max(v);
        let h = &self.hopf;
        let nh = h.dim();
        let nb = self.b.dim();
        let bb = |a| basis(nb, a);
        let mut pieces = vec![(Target::M, self.m.dim())];
        if let Some(s) = &self.second {
            pieces.push((Target::Two, s.omega2.dim()));
        }
        for a in 0..nb {
            let (ea, sa) = (bb(a), self.b.star_vec(&bb(a)));
            upd(&mut r.algebra, max_norm(&(self.b_mul.apply(&self.b_unit, &ea) - &ea)));
            upd(&mut r.algebra, max_norm(&(self.b_mul.apply(&ea, &self.b_unit) - &ea)));
            upd(&mut r.algebra, max_norm(&(self.b.star_vec(&sa) - &ea)));
            for c in 0..nb {
                let ec = bb(c);
                let ac = self.b_mul.apply(&ea, &ec);
                let lhs = self.b.star_vec(&ac);
                upd(&mut r.algebra, max_norm(&(lhs - self.b_mul.apply(&self.b.star_vec(&ec), &sa))));
                for e in 0..nb {
                    let lhs = self.b_mul.apply(&ac, &bb(e));
                    let rhs = self.b_mul.apply(&ea, &self.b_mul.apply(&ec, &bb(e)));
                    upd(&mut r.algebra, max_norm(&(lhs - rhs)));
                }
            }
            if let Some(d) = &self.d {
                // ∂(b*) = −∂(b)*
                upd(&mut r.derivation, max_norm(&(d * &sa + self.m.star_vec(&(d * &ea)))));
                for c in 0..nb {
                    let ec = bb(c);
                    let lhs = d * self.b_mul.apply(&ea, &ec);
                    let rhs = self.right.apply(&(d * &ea), &ec) + self.left.apply(&ea, &(d * &ec));
                    upd(&mut r.derivation, max_norm(&(lhs - rhs)));
                }
            }
        }
        for i in 0..nh {
            let hi = basis(nh, i);
            let d = &h.comul[i];
            let s_star = h.star_vec(&(&h.antipode * &hi));
            for a in 0..nb {
                let ea = bb(a);
                // (b b')◁h = (b◁h₁)(b'◁h₂), 1◁h = ε(h)1, (b◁h)* = b*◁S(h)*
                for c in 0..nb {
                    let ec = bb(c);
                    let lhs = self.b.act(&self.b_mul.apply(&ea, &ec), &hi);
                    let mut rhs = Vector::zeros(nb);
                    for (j, k, w) in nonzero(d) {
                        rhs += self.b_mul.apply(&self.b.act(&ea, &basis(nh, j)), &self.b.act(&ec, &basis(nh, k))) * w;
                    }
                    upd(&mut r.action, max_norm(&(lhs - rhs)));
                }
                let lhs = self.b.star_vec(&self.b.act(&ea, &hi));
                upd(&mut r.action, max_norm(&(lhs - self.b.act(&self.b.star_vec(&ea), &s_star))));
                if let Some(dm) = &self.d {
                    upd(&mut r.derivation, max_norm(&(dm * self.b.act(&ea, &hi) - self.m.act(&(dm * &ea), &hi))));
                }
            }
            upd(&mut r.action, max_norm(&(self.b.act(&self.b_unit, &hi) - &self.b_unit * h.counit[i])));
            for &(t, dim) in &pieces {
                let p = self.piece(t).expect("listed piece");
                for x in 0..dim {
                    let ex = basis(dim, x);
                    let lhs = p.star_vec(&p.act(&ex, &hi));
                    upd(&mut r.action, max_norm(&(lhs - p.act(&p.star_vec(&ex), &s_star))));
                    for a in 0..nb {
                        let ea = bb(a);
                        for (side, lhs) in [
                            (true, p.act(&self.product(Target::B, &ea, t, &ex).expect("bimodule"), &hi)),
                            (false, p.act(&self.product(t, &ex, Target::B, &ea).expect("bimodule"), &hi)),
                        ] {
                            let mut rhs = Vector::zeros(dim);
                            for (j, k, w) in nonzero(d) {
                                let (hj, hk) = (basis(nh, j), basis(nh, k));
                                rhs += if side {
                                    self.product(Target::B, &self.b.act(&ea, &hj), t, &p.act(&ex, &hk)).expect("bimodule")
                                } else {
                                    self.product(t, &p.act(&ex, &hj), Target::B, &self.b.act(&ea, &hk)).expect("bimodule")
                                } * w;
                            }
                            upd(&mut r.action, max_norm(&(lhs - rhs)));
                        }
                    }
                }
            }
        }
        for &(t, dim) in &pieces {
            let p = self.piece(t).expect("listed piece");
            for x in 0..dim {
                let ex = basis(dim, x);
                let one_l = self.product(Target::B, &self.b_unit, t, &ex).expect("bimodule");
                let one_r = self.product(t, &ex, Target::B, &self.b_unit).expect("bimodule");
                upd(&mut r.bimodule, max_norm(&(one_l - &ex)).max(max_norm(&(one_r - &ex))));
                upd(&mut r.bimodule, max_norm(&(p.star_vec(&p.star_vec(&ex)) - &ex)));
                for a in 0..nb {
                    let ea = bb(a);
                    let bx = self.product(Target::B, &ea, t, &ex).expect("bimodule");
                    let xb = self.product(t, &ex, Target::B, &ea).expect("bimodule");
                    // (b·x)* = x*·b*
                    let lhs = p.star_vec(&bx);
                    let rhs = self.product(t, &p.star_vec(&ex), Target::B, &self.b.star_vec(&ea)).expect("bimodule");
                    upd(&mut r.bimodule, max_norm(&(lhs - rhs)));
                    let lhs = p.star_vec(&xb);
                    let rhs = self.product(Target::B, &self.b.star_vec(&ea), t, &p.star_vec(&ex)).expect("bimodule");
                    upd(&mut r.bimodule, max_norm(&(lhs - rhs)));
                    for c in 0..nb {
                        let ec = bb(c);
                        let l1 = self.product(Target::B, &self.b_mul.apply(&ea, &ec), t, &ex).expect("bimodule");
                        let r1 = self.product(Target::B, &ea, t, &self.product(Target::B, &ec, t, &ex).expect("bimodule")).expect("bimodule");
                        let l2 = self.product(t, &xb, Target::B, &ec).expect("bimodule");
                        let r2 = self.product(t, &ex, Target::B, &self.b_mul.apply(&ea, &ec)).expect("bimodule");
                        let l3 = self.product(t, &bx, Target::B, &ec).expect("bimodule");
                        let r3 = self.product(Target::B, &ea, t, &self.product(t, &ex, Target::B, &ec).expect("bimodule")).expect("bimodule");
                        upd(&mut r.bimodule, max_norm(&(l1 - r1)).max(max_norm(&(l2 - r2))).max(max_norm(&(l3 - r3))));
                    }
                }
            }
        }
        if let Some(s) = &self.second {
            upd(&mut r.second_order, self.second_order_defect(s));
        }
        r
    }

    /// Wedge balanced over `B` and a bimodule map, `d₁` a graded derivation compatible with `d_B`,
    /// star reverses wedges with a sign, `d₁∘d_B = 0`.
    fn second_order_defect(&self, s: &SecondOrder) -> f64 {
        let nb = self.b.dim();
        let nm = self.m.dim();
        let mut worst: f64 = 0.0;
        let zero = Matrix::zeros(nm, nb);
        let d = self.d.as_ref().unwrap_or(&zero);
        for x in 0..nm {
            let ex = basis(nm, x);
            // d(x*) = −(dx)*
            let lhs = &s.d1 * self.m.star_vec(&ex);
            worst = worst.max(max_norm(&(lhs + s.omega2.star_vec(&(&s.d1 * &ex)))));
            for a in 0..nb {
                let ea = basis(nb, a);
                // d(b·x) = db∧x + b·dx, d(x·b) = dx·b − x∧db
                let lhs = &s.d1 * self.left.apply(&ea, &ex);
                let rhs = s.wedge.apply(&(d * &ea), &ex) + s.left.apply(&ea, &(&s.d1 * &ex));
                worst = worst.max(max_norm(&(lhs - rhs)));
                let lhs = &s.d1 * self.right.apply(&ex, &ea);
                let rhs = s.right.apply(&(&s.d1 * &ex), &ea) - s.wedge.apply(&ex, &(d * &ea));
                worst = worst.max(max_norm(&(lhs - rhs)));
                for y in 0..nm {
                    let ey = basis(nm, y);
                    let lhs = s.wedge.apply(&self.right.apply(&ex, &ea), &ey);
                    let rhs = s.wedge.apply(&ex, &self.left.apply(&ea, &ey));
                    worst = worst.max(max_norm(&(lhs - rhs)));
                    let lhs = s.wedge.apply(&self.left.apply(&ea, &ex), &ey);
                    let rhs = s.left.apply(&ea, &s.wedge.apply(&ex, &ey));
                    worst = worst.max(max_norm(&(lhs - rhs)));
                    let lhs = s.wedge.apply(&ex, &self.right.apply(&ey, &ea));
                    let rhs = s.right.apply(&s.wedge.apply(&ex, &ey), &ea);
                    worst = worst.max(max_norm(&(lhs - rhs)));
                }
            }
            for y in 0..nm {
                let ey = basis(nm, y);
                // (x∧y)* = −y*∧x*
                let lhs = s.omega2.star_vec(&s.wedge.apply(&ex, &ey));
                let rhs = s.wedge.apply(&self.m.star_vec(&ey), &self.m.star_vec(&ex));
                worst = worst.max(max_norm(&(lhs + rhs)));
            }
        }
        for a in 0..nb {
            worst = worst.max(max_norm(&(&s.d1 * (d * basis(nb, a)))));
        }
        worst
    }
}

/// Non-zero entries of a coproduct matrix.
pub(crate) fn nonzero(d: &Matrix) -> Vec<(usize, usize, C)> {
    let mut v = Vec::new();
    for j in 0..d.nrows() {
        for k in 0..d.ncols() {
            if d[(j, k)] != C::new(0.0, 0.0) {
                v.push((j, k, d[(j, k)]));
            }
        }
    }
    v
}
