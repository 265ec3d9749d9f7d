use std::f64::consts::PI;
use std::sync::Arc;

use gauge::*;
use heisenberg::packets::{natural, Packet};
use heisenberg::{Frame, GradedElement, GridSpec};
use nc_torus::{d_b, TorusElement};
use num_complex::Complex64;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn frame() -> Arc<Frame> {
    Frame::golden(GridSpec::default())
}

fn fine() -> Arc<Frame> {
    Frame::golden(GridSpec { n: 2048, mode_cutoff: 10, ..GridSpec::default() })
}

fn torus(fr: &Arc<Frame>) -> TorusElement {
    TorusElement::from_terms(fr.theta, &[(0, 0, c(0.5, 0.1)), (1, 0, c(0.3, -0.2)), (-1, 2, c(0.1, 0.4))])
}

/// Width-one packet; broad enough that fourth-order differences are accurate to ~1e-8.
fn broad(fr: &Arc<Frame>, m: i64) -> GradedElement {
    if m == 0 {
        return GradedElement::torus(fr, torus(fr));
    }
    GradedElement::module(Packet { width: 1.0, center: 0.2, freq: 0.5, sector_slope: 0.3 }.build(fr, m))
}

fn narrow(fr: &Arc<Frame>, m: i64, v: u32) -> GradedElement {
    if m == 0 {
        GradedElement::torus(fr, torus(fr))
    } else {
        GradedElement::module(natural(fr, m, v))
    }
}

#[test]
fn flat_connection_on_generators() {
    let fr = frame();
    let u = GradedElement::torus(&fr, TorusElement::u(fr.theta));
    let HorizontalForm::One(a, b) = nabla0(&u) else { panic!("degree") };
    let expect = TorusElement::u(fr.theta).scale(I * 2.0 * PI);
    assert!(a.torus_part().unwrap().distance(&expect) < 1e-12);
    assert!(b.max_abs() < 1e-12);
    assert!(nabla0(&GradedElement::one(&fr)).max_abs() == 0.0);
}

#[test]
fn flat_connection_restricts_to_torus_differential() {
    let fr = frame();
    let t = torus(&fr);
    let HorizontalForm::One(a, b) = nabla0(&GradedElement::torus(&fr, t.clone())) else { panic!("degree") };
    // Torus one-form pairs carry an overall factor i.
    let d = d_b(&t);
    assert!(a.torus_part().unwrap().distance(&d.b1.scale(I)) == 0.0);
    assert!(b.torus_part().unwrap().distance(&d.b2.scale(I)) == 0.0);
}

#[test]
fn flat_connection_components_are_derivatives() {
    let fr = frame();
    let p = broad(&fr, 1);
    let HorizontalForm::One(a, b) = nabla0(&p) else { panic!("degree") };
    let h = p.module_part(1).unwrap();
    assert!(a.module_part(1).unwrap().rel_distance(&h.partial(nc_torus::Axis::One).scale(I)).unwrap() == 0.0);
    assert!(b.module_part(1).unwrap().rel_distance(&h.partial(nc_torus::Axis::Two).scale(I)).unwrap() == 0.0);
}

#[test]
fn generators_wedge_and_twist() {
    let fr = frame();
    let (t1, t2, vol) = (HorizontalForm::dtau1(&fr), HorizontalForm::dtau2(&fr), HorizontalForm::vol(&fr));
    assert!(t1.wedge(&t2).unwrap().distance(&vol).unwrap() == 0.0);
    assert!(t2.wedge(&t1).unwrap().distance(&vol.scale(c(-1.0, 0.0))).unwrap() == 0.0);
    assert!(t1.wedge(&t1).unwrap().max_abs() == 0.0);
    assert!(t1.wedge(&vol).is_err());
    let p = broad(&fr, 2);
    let eps2 = fr.quad.eps_pow_f64(-2);
    let HorizontalForm::One(a, _) = t1.right_mul(&p).unwrap() else { panic!("degree") };
    assert!(a.rel_distance(&p.scale(c(eps2, 0.0))).unwrap() < 1e-14);
    let HorizontalForm::Two(v) = vol.right_mul(&p).unwrap() else { panic!("degree") };
    assert!(v.rel_distance(&p.scale(c(eps2 * eps2, 0.0))).unwrap() < 1e-14);
}

#[test]
fn flat_connection_is_a_twisted_derivation() {
    let fr = fine();
    for (m, n) in [(0, 1), (1, 0), (1, 1), (-1, 1)] {
        let (p, q) = (narrow(&fr, m, 0), narrow(&fr, n, 1));
        let lhs = nabla0(&p.mul(&q).unwrap());
        let rhs = nabla0(&p).right_mul(&q).unwrap().add(&nabla0(&q).left_mul(&p).unwrap()).unwrap();
        let r = lhs.rel_distance(&rhs).unwrap();
        assert!(r < 1e-5, "({m},{n}): {r}");
    }
}

#[test]
fn potential_shift_is_invisible_on_the_torus() {
    let fr = frame();
    let b = broad(&fr, 0);
    for s in [(0.0, 0.0), (1.0, 0.0), (3.0, -2.0)] {
        let w = apply_potential(&GaugePotential::new(s.0, s.1), &b).unwrap();
        assert!(w.distance(&nabla0(&b)).unwrap() < 1e-14);
    }
}

#[test]
fn potential_shift_on_grade_one() {
    let fr = frame();
    let p = broad(&fr, 1);
    let zero = apply_potential(&GaugePotential::default(), &p).unwrap();
    assert!(zero.distance(&nabla0(&p)).unwrap() == 0.0);
    let shifted = apply_potential(&GaugePotential::new(1.0, 0.0), &p).unwrap();
    let extra = shifted.sub(&nabla0(&p)).unwrap();
    // dτ¹·p = ε⁻¹p·dτ¹, so [i dτ¹, p] = i(ε⁻¹ − 1)p·dτ¹.
    let k = I * (1.0 / fr.eps - 1.0);
    let expect = HorizontalForm::One(p.scale(k), GradedElement::zero(&fr));
    assert!(extra.rel_distance(&expect).unwrap() < 1e-14);
}

#[test]
fn field_strength_vanishes_on_the_torus() {
    let fr = frame();
    let f = field_strength(&GaugePotential::new(0.7, -1.1), &broad(&fr, 0)).unwrap();
    assert!(f.max_abs() < 1e-9);
}

#[test]
fn field_strength_eigenvalues() {
    let fr = frame();
    assert!((curvature_eigenvalue(&fr.quad, 1) - 2.0 * PI / fr.eps).abs() < 1e-13);
    for m in -3..=3i64 {
        if m == 0 {
            continue;
        }
        let p = broad(&fr, m);
        let f = field_strength(&GaugePotential::default(), &p).unwrap();
        let lam = curvature_eigenvalue(&fr.quad, m);
        let expect = HorizontalForm::Two(p.scale(c(lam, 0.0)));
        let r = f.rel_distance(&expect).unwrap();
        assert!(r < 1e-5, "m={m}: {r}");
    }
}

#[test]
fn field_strength_against_constant_vol_commutator() {
    let fr = frame();
    let k = vol_constant(&fr.quad);
    for m in [-2, -1, 1, 2] {
        let p = broad(&fr, m);
        let f = field_strength(&GaugePotential::default(), &p).unwrap();
        // vol·p = σ²(p)·vol makes [k·vol, p] = k(ε^{−2m} − 1)p, the negative of F.
        let comm = vol_commutator(k, &p).unwrap();
        assert!(f.add(&comm).unwrap().max_abs() < 1e-5 * f.max_abs(), "m={m}");
        assert!(f.rel_distance(&comm).unwrap() > 1.0);
    }
}

#[test]
fn field_strength_ignores_the_potential() {
    let fr = frame();
    for m in [-2, -1, 1, 2, 3] {
        let p = broad(&fr, m).add(&broad(&fr, 0)).unwrap();
        let f0 = field_strength(&GaugePotential::default(), &p).unwrap();
        for s in [(3.0, -2.0), (1.0, 0.0), (0.0, 1.0), (-0.5, 2.5), (10.0, 7.0)] {
            let f = field_strength(&GaugePotential::new(s.0, s.1), &p).unwrap();
            let r = f.rel_distance(&f0).unwrap();
            assert!(r < 1e-8, "m={m} s={s:?}: {r}");
        }
    }
}

#[test]
fn gauge_transformations() {
    let fr = wide();
    let p = broad(&fr, 1);
    assert!(gauge_transform(c(1.0, 0.0), &p).unwrap().distance(&p).unwrap() == 0.0);
    assert!(gauge_transform(c(-1.0, 0.0), &p).unwrap().distance(&p.scale(c(-1.0, 0.0))).unwrap() == 0.0);
    assert!(matches!(gauge_transform(c(1.0, 1.0), &p), Err(GaugeError::NotUnitary(_))));

    let x = broad(&fr, 1).add(&broad(&fr, 0)).unwrap().add(&broad(&fr, -1)).unwrap();
    let y = broad(&fr, 1).add(&broad(&fr, 2)).unwrap();
    let (z1, z2) = (I, Complex64::from_polar(1.0, 2.0 * PI / 7.0));
    let composed = gauge_transform(z1, &gauge_transform(z2, &x).unwrap()).unwrap();
    assert!(composed.rel_distance(&gauge_transform(z1 * z2, &x).unwrap()).unwrap() < 1e-15);
    let b = broad(&fr, 0);
    assert!(gauge_transform(z2, &b).unwrap().distance(&b).unwrap() == 0.0);
    let lhs = gauge_transform(z2, &x.mul(&y).unwrap()).unwrap();
    let rhs = gauge_transform(z2, &x).unwrap().mul(&gauge_transform(z2, &y).unwrap()).unwrap();
    assert!(lhs.rel_distance(&rhs).unwrap() < 1e-12);
    let lhs = gauge_transform(z2, &x.star().unwrap()).unwrap();
    let rhs = gauge_transform(z2, &x).unwrap().star().unwrap();
    assert!(lhs.rel_distance(&rhs).unwrap() < 1e-12);
}

fn wide() -> Arc<Frame> {
    Frame::golden(GridSpec { l: 20.0, n: 2048, mode_cutoff: 10, ..GridSpec::default() })
}

#[test]
fn gauge_group_acts_trivially_on_potentials() {
    let fr = frame();
    let vectors: Vec<GradedElement> = (-2..=2).map(|m| broad(&fr, m)).collect();
    for zeta in [I, Complex64::from_polar(1.0, 2.0 * PI / 7.0)] {
        for s in [(0.0, 0.0), (1.0, -1.0), (2.5, 0.3)] {
            let pot = GaugePotential::new(s.0, s.1);
            for v in &vectors {
                let a = transform_potential(zeta, &pot, v).unwrap();
                let b = apply_potential(&pot, v).unwrap();
                assert!(a.rel_distance(&b).unwrap() < 1e-8);
            }
        }
    }
}

#[test]
fn other_quadratic_tori() {
    use quad_field::{QuadContext, QuadraticIrrational};
    for t in [QuadraticIrrational::sqrt2(), QuadraticIrrational::one_plus_sqrt3()] {
        let q = QuadContext::new(t).unwrap();
        let fr = Frame::new(q, GridSpec::default()).unwrap();
        let p = broad(&fr, 1);
        let f = field_strength(&GaugePotential::new(1.0, 2.0), &p).unwrap();
        let expect = HorizontalForm::Two(p.scale(c(curvature_eigenvalue(&fr.quad, 1), 0.0)));
        assert!(f.rel_distance(&expect).unwrap() < 1e-5);
    }
}
