mod common;

use common::*;
use heisenberg::packets::{natural, Packet};
use heisenberg::*;
use nc_torus::{Axis, TorusElement};
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn torus_unit_acts_trivially() {
    let fr = default_frame();
    let p = packet(&fr, 1, 0);
    let one = GradedElement::one(&fr);
    assert!(one.mul(&p).unwrap().distance(&p).unwrap() < 1e-12);
    assert!(p.mul(&one).unwrap().distance(&p).unwrap() < 1e-12);
}

#[test]
fn bimodule_associativity_with_torus() {
    let fr = default_frame();
    let b = GradedElement::torus(&fr, torus_sample(fr.theta, 0));
    let b2 = GradedElement::torus(&fr, torus_sample(fr.theta, 1));
    let p = GradedElement::module(Packet { width: 1.0, center: 0.2, freq: 0.3, sector_slope: 0.0 }.build(&fr, 1));
    let lhs = b.mul(&p).unwrap().mul(&b2).unwrap();
    let rhs = b.mul(&p.mul(&b2).unwrap()).unwrap();
    assert!(lhs.rel_distance(&rhs).unwrap() < 1e-6);
}

#[test]
fn pairing_with_star_is_the_inner_product() {
    let fr = fine_frame();
    for m in [1, 2, -1] {
        let f = natural(&fr, m, 0);
        let g = natural(&fr, m, 1);
        let t = GradedElement::module(f.star_p().unwrap()).mul(&GradedElement::module(g.clone())).unwrap();
        let tau = t.torus_part().unwrap().coeff(0, 0);
        let oracle = f.inner(&g).unwrap();
        assert!((tau - oracle).norm() < 1e-6 * oracle.norm(), "m={m}: {tau} vs {oracle}");
    }
}

/// Direct evaluation of the j-sum over a generous fixed range, using point
/// evaluation only.
fn jsum_oracle(f: &HeisenbergElement, g: &HeisenbergElement, x: f64, k: i64) -> Complex64 {
    let fr = &f.frame;
    let (m, n) = (f.m, g.m);
    let (dm, dn, dmn) = (fr.grade(m), fr.grade(n), fr.grade(m + n));
    let (cm, cn, cmn) = (dm.c as f64, dn.c as f64, dmn.c as f64);
    let kf = k as f64;
    (-200..=200i64)
        .map(|j| {
            let jf = j as f64;
            f.eval(x / dn.e + dm.e * (kf * dn.d as f64 / cm - kf / cmn - jf / cm), dn.d * k - j)
                * g.eval(x - kf * dmn.d as f64 / cmn + jf / cn, dn.a * j)
        })
        .sum()
}

#[test]
fn jsum_matches_wide_range_oracle() {
    let fr = default_frame();
    for (m, n) in [(1, 1), (-1, 2), (2, -1), (1, -2), (-2, 1), (2, 1)] {
        let f = natural(&fr, m, 0);
        let g = natural(&fr, n, 1);
        let p = GradedElement::module(f.clone()).mul(&GradedElement::module(g.clone())).unwrap();
        let h = p.module_part(m + n).unwrap();
        let gr = fr.grid;
        for i in [100usize, 400, 512, 700, 950] {
            for k in 0..h.sectors() {
                let x = gr.x(i);
                let o = jsum_oracle(&f, &g, x, k as i64);
                assert!((h.samples[k][i] - o).norm() < 1e-12, "(m,n)=({m},{n}) x={x} k={k}");
            }
        }
    }
}

#[test]
fn truncation_is_reported_on_small_windows() {
    let fr = default_frame();
    let (_, d) = packet(&fr, 2, 0).mul_diag(&packet(&fr, -1, 1)).unwrap();
    let (_, d2) = packet(&fr, 2, 0).mul(&packet(&fr, -1, 1)).unwrap().mul_diag(&packet(&fr, 1, 2)).unwrap();
    assert!(d.warnings.is_empty());
    assert!(!d2.warnings.is_empty());
    let tight = Frame::golden(GridSpec { mode_cutoff: 1, ..GridSpec::default() });
    let (_, d3) = packet(&tight, 1, 0).mul_diag(&packet(&tight, -1, 1)).unwrap();
    assert!(d3.mode_tail > tight.grid.tol && !d3.warnings.is_empty());
}

#[test]
fn associativity_on_total_grade_up_to_two() {
    let fr = wide_frame();
    let triples = [
        (-1, 1, 1), (1, 1, -1), (1, -1, 1), (-1, 1, -1), (-1, -1, 1), (1, -2, 2), (2, -1, 1), (-1, 2, -1),
        (0, 1, -1), (1, 0, -1), (1, -1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (-1, -1, 2),
    ];
    for (a, b, c) in triples {
        let (x, y, z) = (packet(&fr, a, 0), packet(&fr, b, 1), packet(&fr, c, 2));
        let (xy, d1) = x.mul_diag(&y).unwrap();
        let (lhs, d2) = xy.mul_diag(&z).unwrap();
        let (yz, d3) = y.mul_diag(&z).unwrap();
        let (rhs, d4) = x.mul_diag(&yz).unwrap();
        let r = lhs.rel_distance(&rhs).unwrap();
        assert!(r < 1e-4, "({a},{b},{c}): {r}");
        for d in [d1, d2, d3, d4] {
            assert!(d.warnings.is_empty(), "({a},{b},{c}): {:?}", d.warnings);
        }
    }
}

#[test]
fn star_is_antimultiplicative() {
    let fr = wide_frame();
    for (a, b) in [(1, 1), (1, -1), (-1, 1), (0, 1), (1, 0), (2, -1), (-1, -1)] {
        let (x, y) = (packet(&fr, a, 0), packet(&fr, b, 1));
        let lhs = x.mul(&y).unwrap().star().unwrap();
        let rhs = y.star().unwrap().mul(&x.star().unwrap()).unwrap();
        let r = lhs.rel_distance(&rhs).unwrap();
        assert!(r < 1e-4, "({a},{b}): {r}");
    }
}

#[test]
fn product_is_bilinear_over_grades() {
    let fr = wide_frame();
    let x = packet(&fr, -1, 0).add(&packet(&fr, 0, 1)).unwrap().add(&packet(&fr, 1, 2)).unwrap();
    let y = packet(&fr, 1, 1).add(&packet(&fr, 0, 0)).unwrap();
    let whole = x.mul(&y).unwrap();
    let mut parts = GradedElement::zero(&fr);
    for (&m, _) in &x.parts {
        for (&n, _) in &y.parts {
            let xm = GradedElement { frame: fr.clone(), parts: [(m, x.part(m).unwrap().clone())].into() };
            let yn = GradedElement { frame: fr.clone(), parts: [(n, y.part(n).unwrap().clone())].into() };
            parts = parts.add(&xm.mul(&yn).unwrap()).unwrap();
        }
    }
    assert!(whole.rel_distance(&parts).unwrap() < 1e-14);
    assert_eq!(whole.parts.keys().copied().collect::<Vec<_>>(), vec![-1, 0, 1, 2]);
}

fn twist_residuals(x: &GradedElement, y: &GradedElement) -> (f64, f64) {
    let mut t1: f64 = 0.0;
    let mut t2: f64 = 0.0;
    for ax in [Axis::One, Axis::Two] {
        let lhs = x.mul(y).unwrap().partial(ax);
        let rhs = x.partial(ax).mul(&y.sigma()).unwrap().add(&x.mul(&y.partial(ax)).unwrap()).unwrap();
        t1 = t1.max(lhs.rel_distance(&rhs).unwrap());
        let lhs = x.star().unwrap().partial(ax);
        let rhs = x.partial(ax).star().unwrap().sigma().scale(Complex64::new(-1.0, 0.0));
        t2 = t2.max(lhs.rel_distance(&rhs).unwrap());
    }
    (t1, t2)
}

#[test]
fn twisted_leibniz_and_star_on_fixed_pairs() {
    let fr = fine_frame();
    for (a, b) in [(0, 1), (1, 0), (1, 1), (-1, 1)] {
        let (t1, t2) = twist_residuals(&packet(&fr, a, 0), &packet(&fr, b, 1));
        assert!(t1 < 1e-5 && t2 < 1e-5, "({a},{b}): {t1} {t2}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]
    #[test]
    fn twisted_leibniz_on_random_packets(
        pair in prop::sample::select(vec![(0i64, 1i64), (1, 0), (1, 1), (-1, 1)]),
        c0 in -0.3f64..0.3, c1 in -0.3f64..0.3, f0 in -0.8f64..0.8, f1 in -0.8f64..0.8, s in 0.0f64..0.5,
    ) {
        let fr = fine_frame();
        let build = |m: i64, c: f64, f: f64| {
            if m == 0 {
                GradedElement::torus(&fr, TorusElement::from_terms(fr.theta, &[(0, 0, Complex64::new(1.0, c)), (1, -1, Complex64::new(f, s)), (-1, 0, Complex64::new(s, 0.0))]))
            } else {
                let w = heisenberg::packets::natural_width(&fr, m);
                GradedElement::module(Packet { width: w, center: c * w, freq: f, sector_slope: s }.build(&fr, m))
            }
        };
        let (t1, t2) = twist_residuals(&build(pair.0, c0, f0), &build(pair.1, c1, f1));
        prop_assert!(t1 < 1e-5 && t2 < 1e-5, "{:?}: {} {}", pair, t1, t2);
    }
}
