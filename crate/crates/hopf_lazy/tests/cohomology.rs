//! Lazy Hochschild dimensions against a brute-force group-cohomology enumerator.

use hopf_lazy::instances::*;
use hopf_lazy::*;
use num_rational::Ratio;

type Q = Ratio<i64>;

const TOL: f64 = 1e-10;

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != Q::from(0)) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c];
        for i in 0..rows.len() {
            if i != r && rows[i][c] != Q::from(0) {
                let f = rows[i][c] / pivot;
                for j in c..cols {
                    let v = rows[r][j];
                    rows[i][j] -= f * v;
                }
            }
        }
        r += 1;
    }
    r
}

fn mat_pow(t: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let d = t.len();
    let mut out: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect();
    for _ in 0..k {
        out = (0..d).map(|i| (0..d).map(|j| (0..d).map(|l| out[i][l] * t[l][j]).sum()).collect()).collect();
    }
    out
}

/// `(dim Z¹, dim B¹)` of `Z_n` acting on the right on `Z^d` through `v ↦ t·v` for the generator,
/// by enumerating `f(g^{j+k}) = f(g^j)·g^k + f(g^k)` over every pair.
fn group_cohomology(n: usize, t: &[Vec<i64>]) -> (usize, usize) {
    let d = t.len();
    let unknowns = n * d;
    let var = |j: usize, a: usize| (j % n) * d + a;
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            let tk = mat_pow(t, k);
            for a in 0..d {
                let mut row = vec![Q::from(0); unknowns];
                row[var(j + k, a)] += Q::from(1);
                for b in 0..d {
                    row[var(j, b)] -= Q::from(tk[a][b]);
                }
                row[var(k, a)] -= Q::from(1);
                rows.push(row);
            }
        }
    }
    let z1 = unknowns - rank(rows);
    // B¹ is the image of v ↦ (v·g^j − v)_j
    let mut img = Vec::new();
    for j in 0..n {
        let tj = mat_pow(t, j);
        for a in 0..d {
            img.push((0..d).map(|b| Q::from(tj[a][b] - (a == b) as i64)).collect());
        }
    }
    (z1, rank(img))
}

/// `(v◁g)(x) = v(x+1)` on `blocks` copies of `R^n`.
fn shift_matrix(n: usize, blocks: usize) -> Vec<Vec<i64>> {
    let d = n * blocks;
    (0..d).map(|i| (0..d).map(|j| (j / n == i / n && j % n == (i % n + 1) % n) as i64).collect()).collect()
}

fn identity(d: usize) -> Vec<Vec<i64>> {
    (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect()
}

fn check_space(alg: &ModuleAlgebra, expected: (usize, usize)) -> CohomologyDims {
    let space = alg.solve_hochschild_space(Target::M).unwrap();
    assert_eq!((space.dims.zh1, space.dims.bh1), expected, "{}", alg.name);
    assert_eq!(space.dims.hh1, expected.0 - expected.1);
    for mu in space.cocycles.iter().chain(&space.coboundaries) {
        let r = alg.check_hochschild(mu).unwrap();
        assert!(r.passes(TOL), "{}: {r:?}", alg.name);
    }
    space.dims
}

#[test]
fn oracle_sanity() {
    // Z₂ acting by sign on Z: Z¹ = {f(g) = v}, all v with v − v = 0 → 1; B¹ = image of −2 → 1
    assert_eq!(group_cohomology(2, &[vec![-1]]), (1, 1));
    assert_eq!(group_cohomology(4, &identity(3)), (0, 0));
    assert_eq!(group_cohomology(3, &shift_matrix(3, 1)), (2, 2));
}

#[test]
fn shift_instances_match_group_cohomology() {
    for n in [2, 3, 4, 6] {
        let expected = group_cohomology(n, &shift_matrix(n, 1));
        assert_eq!(expected, (n - 1, n - 1));
        let dims = check_space(&shift(n), expected);
        assert_eq!(dims.ch0, n);
    }
}

#[test]
fn trivial_action_has_no_cocycles() {
    for n in [2, 3, 4, 6] {
        let expected = group_cohomology(n, &identity(n));
        assert_eq!(expected, (0, 0));
        check_space(&shift_trivial(n), expected);
    }
}

#[test]
fn cayley_instances_match_group_cohomology() {
    // central self-adjoint one-forms are i(a₁η₁ + a₂η₂) with real a_j
    for n in [2, 3, 4, 6] {
        let expected = group_cohomology(n, &shift_matrix(n, 2));
        assert_eq!(expected, (2 * (n - 1), 2 * (n - 1)));
        let dims = check_space(&cayley(n), expected);
        assert_eq!(dims.ch0, 2 * n);
    }
}

#[test]
fn dual_numbers_cohomology() {
    // self-adjoint elements a + bx with g acting by diag(1, −1)
    let expected = group_cohomology(2, &[vec![1, 0], vec![0, -1]]);
    assert_eq!(expected, (1, 1));
    check_space(&dual_numbers(), expected);
}

#[test]
fn zero_module_has_zero_cohomology() {
    let mut alg = shift(3);
    alg.m = Piece { labels: vec![], star: Matrix::zeros(0, 0), action: vec![Matrix::zeros(0, 0); 3] };
    alg.left = Bilinear::zero(3, 0, 0);
    alg.right = Bilinear::zero(0, 3, 0);
    let space = alg.solve_hochschild_space(Target::M).unwrap();
    assert_eq!(space.dims, CohomologyDims { zh1: 0, bh1: 0, hh1: 0, ch0: 0 });
}

#[test]
fn solved_cocycles_restrict_to_group_cocycles() {
    let n = 4;
    let alg = cayley(n);
    let space = alg.solve_hochschild_space(Target::M).unwrap();
    for mu in &space.cocycles {
        // determined by μ(g) through μ(g^{j+1}) = μ(g^j)◁g + μ(g)
        let rebuilt = group_hochschild(&alg, Target::M, &mu.values[1]);
        assert!(rebuilt.distance(mu) <= 1e-9);
        // values lie in the η-span
        for v in &mu.values {
            assert!(v.rows(0, 2 * n).iter().all(|c| c.norm() <= 1e-9));
        }
    }
}

#[test]
fn solver_rejects_b_target() {
    assert!(matches!(shift(2).solve_hochschild_space(Target::B), Err(LazyError::TargetMismatch(..))));
}

#[test]
fn group_reduction_agrees_with_the_lazy_solver() {
    let mut all = vec![dual_numbers()];
    for n in [2, 3, 4, 6] {
        all.extend([shift(n), shift_trivial(n), cayley(n)]);
    }
    for alg in all {
        let lazy = alg.solve_hochschild_space(Target::M).unwrap().dims;
        assert_eq!(alg.group_cohomology(Target::M).unwrap(), Some(lazy), "{}", alg.name);
    }
}

#[test]
fn group_reduction_needs_a_group_algebra() {
    let mut alg = shift(3);
    alg.hopf.comul[1][(1, 1)] = C::new(0.5, 0.0);
    assert!(alg.group_table().is_none());
    assert_eq!(alg.group_cohomology(Target::M).unwrap(), None);
}
