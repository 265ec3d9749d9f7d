//! Shipped instances over `H = C[Z_n]` (basis `g^k`) and cocycle constructors.

use std::f64::consts::PI;

use crate::linalg::{basis, Bilinear, Matrix, Vector, C};
use crate::{Conv, FiniteHopf, ModuleAlgebra, Piece, SecondOrder, Target};

fn one() -> C {
    C::new(1.0, 0.0)
}

/// Functions on `Z_n` with pointwise product and complex conjugation.
fn functions(n: usize) -> (Bilinear, Vector) {
    let mul = Bilinear::from_fn(n, n, n, |x, y| if x == y { basis(n, x) } else { Vector::zeros(n) });
    (mul, Vector::from_element(n, one()))
}

/// `δ_y ◁ g^k = δ_{y−k}`, i.e. `(b◁g)(x) = b(x+1)`, repeated on `blocks` copies.
fn shift_action(n: usize, blocks: usize) -> Vec<Matrix> {
    (0..n)
        .map(|k| {
            let mut m = Matrix::zeros(n * blocks, n * blocks);
            for blk in 0..blocks {
                for y in 0..n {
                    m[(blk * n + (y + n - k) % n, blk * n + y)] = one();
                }
            }
            m
        })
        .collect()
}

fn labels(n: usize, suffix: &str) -> Vec<String> {
    (0..n).map(|x| format!("δ{x}{suffix}")).collect()
}

/// `B = C(Z_n)` with the shift action and `M = B` as a bimodule, no derivation.
pub fn shift(n: usize) -> ModuleAlgebra {
    shift_with(n, shift_action(n, 1), "shift")
}

/// As [`shift`] with `H` acting trivially (by the counit).
pub fn shift_trivial(n: usize) -> ModuleAlgebra {
    shift_with(n, vec![Matrix::identity(n, n); n], "shift-trivial")
}

fn shift_with(n: usize, action: Vec<Matrix>, name: &str) -> ModuleAlgebra {
    let (mul, unit) = functions(n);
    let piece = Piece { labels: labels(n, ""), star: Matrix::identity(n, n), action };
    ModuleAlgebra {
        name: format!("{name}-{n}"),
        hopf: FiniteHopf::group_algebra(n),
        b: piece.clone(),
        b_mul: mul.clone(),
        b_unit: unit,
        m: piece,
        left: mul.clone(),
        right: mul,
        d: None,
        second: None,
    }
}

const GENS: [&str; 4] = ["e+", "e-", "η1", "η2"];
/// `dη_j = κ_j vol`.
pub const CAYLEY_KAPPA: [f64; 2] = [1.0, -0.5];

/// Cayley-graph calculus on `C(Z_n)`: `e₊·b = R(b)e₊`, `e₋·b = R⁻¹(b)e₋`, with two central
/// anti-self-adjoint generators `η₁, η₂`. `Ω²` is spanned over `B` by `vol = η₁∧η₂` and
/// `e₊∧e₋ = −e₋∧e₊`.
pub fn cayley(n: usize) -> ModuleAlgebra {
    let (mul, unit) = functions(n);
    let nm = 4 * n;
    let idx = |gen: usize, x: usize| gen * n + x % n;
    let left = Bilinear::from_fn(n, nm, nm, |y, j| if j % n == y { basis(nm, j) } else { Vector::zeros(nm) });
    let right = Bilinear::from_fn(nm, n, nm, |j, y| {
        let (gen, x) = (j / n, j % n);
        let hit = match gen {
            0 => (x + 1) % n == y,
            1 => (y + 1) % n == x,
            _ => x == y,
        };
        if hit {
            basis(nm, j)
        } else {
            Vector::zeros(nm)
        }
    });
    let mut star = Matrix::zeros(nm, nm);
    for x in 0..n {
        star[(idx(1, x + 1), idx(0, x))] = one();
        star[(idx(0, x + n - 1), idx(1, x))] = one();
        star[(idx(2, x), idx(2, x))] = -one();
        star[(idx(3, x), idx(3, x))] = -one();
    }
    let mut d = Matrix::zeros(nm, n);
    for y in 0..n {
        d[(idx(0, y + n - 1), y)] += one();
        d[(idx(0, y), y)] -= one();
        d[(idx(1, y + 1), y)] += one();
        d[(idx(1, y), y)] -= one();
    }
    // Ω² = B·vol ⊕ B·ω with ω = e₊∧e₋, both central
    let n2 = 2 * n;
    let wedge = Bilinear::from_fn(nm, nm, n2, |a, b| {
        let (ga, x, gb, y) = (a / n, a % n, b / n, b % n);
        match (ga, gb) {
            (0, 1) if (x + 1) % n == y => basis(n2, n + x),
            (1, 0) if (y + 1) % n == x => -basis(n2, n + x),
            (2, 3) if x == y => basis(n2, x),
            (3, 2) if x == y => -basis(n2, x),
            _ => Vector::zeros(n2),
        }
    });
    // d = [θ, ·} with θ = e₊ + e₋, plus dη_j = κ_j vol
    let mut d1 = Matrix::zeros(n2, nm);
    for x in 0..n {
        d1[(n + x, idx(0, x))] += one();
        d1[(n + (x + 1) % n, idx(0, x))] -= one();
        d1[(n + (x + n - 1) % n, idx(1, x))] += one();
        d1[(n + x, idx(1, x))] -= one();
        d1[(x, idx(2, x))] = C::new(CAYLEY_KAPPA[0], 0.0);
        d1[(x, idx(3, x))] = C::new(CAYLEY_KAPPA[1], 0.0);
    }
    let mut star2 = Matrix::identity(n2, n2);
    for x in 0..n {
        star2[(n + x, n + x)] = -one();
    }
    let mut two_labels = labels(n, "·vol");
    two_labels.extend(labels(n, "·e+∧e-"));
    let m_labels = (0..nm).map(|j| format!("δ{}·{}", j % n, GENS[j / n])).collect();
    ModuleAlgebra {
        name: format!("cayley-{n}"),
        hopf: FiniteHopf::group_algebra(n),
        b: Piece { labels: labels(n, ""), star: Matrix::identity(n, n), action: shift_action(n, 1) },
        b_mul: mul,
        b_unit: unit,
        m: Piece { labels: m_labels, star, action: shift_action(n, 4) },
        left,
        right,
        d: Some(d),
        second: Some(SecondOrder {
            omega2: Piece { labels: two_labels, star: star2, action: shift_action(n, 2) },
            left: Bilinear::from_fn(n, n2, n2, |y, j| if j % n == y { basis(n2, j) } else { Vector::zeros(n2) }),
            right: Bilinear::from_fn(n2, n, n2, |j, y| if j % n == y { basis(n2, j) } else { Vector::zeros(n2) }),
            wedge,
            d1,
        }),
    }
}

/// `H = C[Z₂]`, `B = C[x]/(x²)` with `x* = x`, `x◁g = −x`, `M = B` and `d(x) = ix`.
pub fn dual_numbers() -> ModuleAlgebra {
    let mul = Bilinear::from_fn(2, 2, 2, |a, b| if a + b < 2 { basis(2, a + b) } else { Vector::zeros(2) });
    let mut flip = Matrix::identity(2, 2);
    flip[(1, 1)] = -one();
    let piece = Piece { labels: vec!["1".into(), "x".into()], star: Matrix::identity(2, 2), action: vec![Matrix::identity(2, 2), flip] };
    let mut d = Matrix::zeros(2, 2);
    d[(1, 1)] = C::new(0.0, 1.0);
    ModuleAlgebra {
        name: "dual-numbers".into(),
        hopf: FiniteHopf::group_algebra(2),
        b: piece.clone(),
        b_mul: mul.clone(),
        b_unit: basis(2, 0),
        m: piece,
        left: mul.clone(),
        right: mul,
        d: Some(d),
        second: None,
    }
}

/// Group-algebra Sweedler cocycle generated by `w = σ(g)`: `σ(g^{j+1}) = (σ(g^j)◁g)·w`.
pub fn group_sweedler(alg: &ModuleAlgebra, w: &Vector) -> Conv {
    let n = alg.hopf.dim();
    let g = &alg.b.action[1 % n];
    let mut values = vec![alg.b_unit.clone()];
    for j in 1..n {
        let prev = &values[j - 1];
        values.push(alg.b_mul.apply(&(g * prev), w));
    }
    Conv { target: Target::B, values }
}

/// Group-algebra Hochschild cochain generated by `v = μ(g)`: `μ(g^{j+1}) = μ(g^j)◁g + v`.
pub fn group_hochschild(alg: &ModuleAlgebra, target: Target, v: &Vector) -> Conv {
    let n = alg.hopf.dim();
    let p = alg.piece(target).expect("instance carries this target");
    let mut values = vec![Vector::zeros(v.len())];
    for j in 1..n {
        let prev = &values[j - 1];
        values.push(&p.action[1 % n] * prev + v);
    }
    Conv { target, values }
}

/// Phases `e^{iφ_x}` as an element of `C(Z_n)`.
pub fn phases(phi: &[f64]) -> Vector {
    Vector::from_iterator(phi.len(), phi.iter().map(|p| C::from_polar(1.0, *p)))
}

/// `σ(g^j) = ζ^{jk}` with `ζ = e^{2πi/n}`.
pub fn character(alg: &ModuleAlgebra, k: i64) -> Conv {
    let n = alg.hopf.dim();
    let zeta = C::from_polar(1.0, 2.0 * PI * k as f64 / n as f64);
    group_sweedler(alg, &(&alg.b_unit * zeta))
}

/// `i(a₁η₁ + a₂η₂)` in the Cayley bimodule, a self-adjoint central one-form for real `a`.
pub fn cayley_eta(n: usize, a1: &[f64], a2: &[f64]) -> Vector {
    let mut v = Vector::zeros(4 * n);
    for x in 0..n {
        v[2 * n + x] = C::new(0.0, a1[x]);
        v[3 * n + x] = C::new(0.0, a2[x]);
    }
    v
}
