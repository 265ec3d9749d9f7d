use crate::linalg::{antilinear, basis, max_norm, Bilinear, Matrix, Vector, C};

/// Finite-dimensional Hopf *-algebra given by structure tensors.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteHopf {
    pub labels: Vec<String>,
    pub mul: Bilinear,
    pub unit: Vector,
    /// `Δ(e_i) = Σ comul[i][(j,k)] e_j ⊗ e_k`
    pub comul: Vec<Matrix>,
    pub counit: Vector,
    /// Column `i` is `S(e_i)`.
    pub antipode: Matrix,
    /// Column `i` is `e_i*`.
    pub star: Matrix,
}

/// Largest violation of each Hopf *-algebra axiom.
#[derive(Debug, Clone, Default)]
pub struct HopfReport {
    pub associativity: f64,
    pub unit: f64,
    pub coassociativity: f64,
    pub counit: f64,
    pub antipode: f64,
    pub bialgebra: f64,
    pub star: f64,
}

impl HopfReport {
    pub fn max(&self) -> f64 {
        [self.associativity, self.unit, self.coassociativity, self.counit, self.antipode, self.bialgebra, self.star]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

fn zc() -> C {
    C::new(0.0, 0.0)
}

impl FiniteHopf {
    /// `C[Z_n]` with basis `g^k`.
    pub fn group_algebra(n: usize) -> Self {
        let e = |k: usize| basis(n, k % n);
        let mut antipode = Matrix::zeros(n, n);
        let mut comul = Vec::new();
        for k in 0..n {
            antipode.set_column(k, &e(n - k));
            let mut d = Matrix::zeros(n, n);
            d[(k, k)] = C::new(1.0, 0.0);
            comul.push(d);
        }
        FiniteHopf {
            labels: (0..n).map(|k| format!("g^{k}")).collect(),
            mul: Bilinear::from_fn(n, n, n, |i, j| e(i + j)),
            unit: e(0),
            comul,
            counit: Vector::from_element(n, C::new(1.0, 0.0)),
            star: antipode.clone(),
            antipode,
        }
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mul_vec(&self, a: &Vector, b: &Vector) -> Vector {
        self.mul.apply(a, b)
    }

    pub fn star_vec(&self, h: &Vector) -> Vector {
        antilinear(&self.star, h)
    }

    /// Coefficient matrix of `Δ(h)`.
    pub fn coproduct(&self, h: &Vector) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (i, hi) in h.iter().enumerate() {
            if *hi != zc() {
                out += &self.comul[i] * *hi;
            }
        }
        out
    }

    /// `(Δ ⊗ id)Δ(e_i)` or `(id ⊗ Δ)Δ(e_i)` as a flat `n³` vector.
    fn iterated(&self, i: usize, left: bool) -> Vec<C> {
        let n = self.dim();
        let d = &self.comul[i];
        let mut t = vec![zc(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut s = zc();
                    for j in 0..n {
                        s += if left { d[(j, c)] * self.comul[j][(a, b)] } else { d[(a, j)] * self.comul[j][(b, c)] };
                    }
                    t[(a * n + b) * n + c] = s;
                }
            }
        }
        t
    }

    pub fn axioms(&self) -> HopfReport {
        let n = self.dim();
        let e = |k| basis(n, k);
        let mut r = HopfReport::default();
        let upd = |x: &mut f64, v: f64| *x = x.max(v);
        for i in 0..n {
            let ei = e(i);
            upd(&mut r.unit, max_norm(&(self.mul_vec(&self.unit, &ei) - &ei)));
            upd(&mut r.unit, max_norm(&(self.mul_vec(&ei, &self.unit) - &ei)));
            for j in 0..n {
                let ej = e(j);
                let eij = self.mul_vec(&ei, &ej);
                for k in 0..n {
                    let ek = e(k);
                    let lhs = self.mul_vec(&eij, &ek);
                    let rhs = self.mul_vec(&ei, &self.mul_vec(&ej, &ek));
                    upd(&mut r.associativity, max_norm(&(lhs - rhs)));
                }
                // Δ(e_i e_j) = Δ(e_i)Δ(e_j)
                let lhs = self.coproduct(&eij);
                let (di, dj) = (&self.comul[i], &self.comul[j]);
                let mut rhs = Matrix::zeros(n, n);
                for a in 0..n {
                    for b in 0..n {
                        if di[(a, b)] == zc() {
                            continue;
                        }
                        for c in 0..n {
                            for d in 0..n {
                                let w = di[(a, b)] * dj[(c, d)];
                                if w == zc() {
                                    continue;
                                }
                                let x = self.mul.basis_product(a, c);
                                let y = self.mul.basis_product(b, d);
                                rhs += (&x * y.transpose()) * w;
                            }
                        }
                    }
                }
                upd(&mut r.bialgebra, (lhs - rhs).iter().map(|c| c.norm()).fold(0.0, f64::max));
                upd(&mut r.bialgebra, (self.counit.dot(&eij) - self.counit[i] * self.counit[j]).norm());
                // (e_i e_j)* = e_j* e_i*
                let lhs = self.star_vec(&eij);
                let rhs = self.mul_vec(&self.star_vec(&ej), &self.star_vec(&ei));
                upd(&mut r.star, max_norm(&(lhs - rhs)));
            }
            let (a, b) = (self.iterated(i, true), self.iterated(i, false));
            upd(&mut r.coassociativity, a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max));
            let d = &self.comul[i];
            let left = d.transpose() * &self.counit;
            let right = d * &self.counit;
            upd(&mut r.counit, max_norm(&(left - &ei)).max(max_norm(&(right - &ei))));
            // m(S ⊗ id)Δ = m(id ⊗ S)Δ = ηε
            let mut l = Vector::zeros(n);
            let mut rr = Vector::zeros(n);
            for a in 0..n {
                for b in 0..n {
                    if d[(a, b)] != zc() {
                        l += self.mul_vec(&self.antipode.column(a).into_owned(), &e(b)) * d[(a, b)];
                        rr += self.mul_vec(&e(a), &self.antipode.column(b).into_owned()) * d[(a, b)];
                    }
                }
            }
            let target = &self.unit * self.counit[i];
            upd(&mut r.antipode, max_norm(&(l - &target)).max(max_norm(&(rr - &target))));
            // star involutive, Δ(h*) = Σ h₁* ⊗ h₂*, S(S(h)*)* = h
            let si = self.star_vec(&ei);
            upd(&mut r.star, max_norm(&(self.star_vec(&si) - &ei)));
            let lhs = self.coproduct(&si);
            let mut rhs = Matrix::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    if d[(a, b)] != zc() {
                        rhs += (self.star.column(a) * self.star.column(b).transpose()) * d[(a, b)].conj();
                    }
                }
            }
            upd(&mut r.star, (lhs - rhs).iter().map(|c| c.norm()).fold(0.0, f64::max));
            let s = self.antipode.column(i).into_owned();
            let back = self.star_vec(&(&self.antipode * self.star_vec(&s)));
            upd(&mut r.star, max_norm(&(back - &ei)));
        }
        upd(&mut r.bialgebra, (self.coproduct(&self.unit) - &self.unit * self.unit.transpose()).iter().map(|c| c.norm()).fold(0.0, f64::max));
        upd(&mut r.bialgebra, (self.counit.dot(&self.unit) - C::new(1.0, 0.0)).norm());
        r
    }
}
