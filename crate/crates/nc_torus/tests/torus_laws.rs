use std::f64::consts::PI;

use nc_torus::*;
use num_complex::Complex64;
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn golden() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Oracle: evaluate a word in U, V, U⁻¹, V⁻¹ by moving letters one at a time
/// with VU = e(θ)UV, tracking the normal-ordered exponents.
fn word(theta: f64, letters: &[(char, i64)]) -> (i64, i64, Complex64) {
    let (mut a, mut b, mut ph) = (0i64, 0i64, c(1.0, 0.0));
    for &(l, e) in letters {
        let step = e.signum();
        for _ in 0..e.abs() {
            match l {
                'U' => {
                    // current UᵃVᵇ · U^{±1}: pass V^b through U^{±1}
                    ph *= Complex64::from_polar(1.0, 2.0 * PI * theta * (b * step) as f64);
                    a += step;
                }
                _ => b += step,
            }
        }
    }
    (a, b, ph)
}

#[test]
fn commutation_relation() {
    let th = golden();
    let (u, v) = (TorusElement::u(th), TorusElement::v(th));
    let uv = &u * &v;
    assert_eq!(uv.coeff(1, 1), c(1.0, 0.0));
    let vu = &v * &u;
    assert!((vu.coeff(1, 1) - phase(th, 1)).norm() < TOL);
    assert!(vu.distance(&uv.scale(phase(th, 1))) < TOL);
}

#[test]
fn monomial_products_match_word_oracle() {
    let th = golden();
    for a in -3..=3 {
        for b in -3..=3 {
            for cc in -3..=3 {
                for d in -3..=3 {
                    let x = TorusElement::monomial(th, a, b, c(1.0, 0.0));
                    let y = TorusElement::monomial(th, cc, d, c(1.0, 0.0));
                    let (m, n, ph) = word(th, &[('U', a), ('V', b), ('U', cc), ('V', d)]);
                    let p = &x * &y;
                    assert_eq!(p.coeffs.len(), 1);
                    assert!((p.coeff(m, n) - ph).norm() < TOL);
                }
            }
        }
    }
}

#[test]
fn monomial_associativity() {
    let th = golden();
    let uv = &TorusElement::u(th) * &TorusElement::v(th);
    let lhs = &uv * &uv;
    let rhs = &(&TorusElement::u(th) * &(&TorusElement::v(th) * &TorusElement::u(th))) * &TorusElement::v(th);
    assert!(lhs.distance(&rhs) < TOL);
}

#[test]
fn star_examples() {
    let th = golden();
    assert!(TorusElement::one(th).star().distance(&TorusElement::one(th)) < TOL);
    let us = TorusElement::u(th).star();
    assert!(us.distance(&TorusElement::monomial(th, -1, 0, c(1.0, 0.0))) < TOL);
    let uv = &TorusElement::u(th) * &TorusElement::v(th);
    let s = uv.star();
    assert!((&s * &uv).distance(&TorusElement::one(th)) < TOL);
    assert!((&uv * &s).distance(&TorusElement::one(th)) < TOL);
    // the phase in (UV)* = e(θ)U⁻¹V⁻¹
    assert!((s.coeff(-1, -1) - phase(th, 1)).norm() < TOL);
}

#[test]
fn theta_mismatch_is_an_error() {
    let x = TorusElement::u(0.3);
    let y = TorusElement::u(0.4);
    assert!(matches!(x.multiply(&y), Err(TorusError::ThetaMismatch(_, _))));
}

#[test]
fn derivation_examples() {
    let th = golden();
    let u = TorusElement::u(th);
    assert!(u.delta(Axis::One).distance(&u.scale(c(2.0 * PI, 0.0))) < TOL);
    assert!(TorusElement::v(th).delta(Axis::One).max_abs() == 0.0);
    let x = TorusElement::monomial(th, 3, -2, c(1.0, 0.0));
    assert!(x.delta(Axis::Two).distance(&x.scale(c(-4.0 * PI, 0.0))) < TOL);
}

#[test]
fn calculus_examples() {
    let th = golden();
    let x = TorusElement::monomial(th, 2, 1, c(1.0, 0.0));
    assert!(d_b1(&d_b(&x)).b.max_abs() < TOL);
    let w = wedge(&dtau1(th), &dtau2(th));
    assert!(w.distance(&vol(th)) < TOL);
    let om = OneFormB { b1: x.clone(), b2: TorusElement::zero(th) };
    assert!(wedge(&om, &om).b.max_abs() < TOL);
    // dτʲ is skew-adjoint: (i dτʲ) is self-adjoint in the pair representation
    assert!(dtau1(th).star().distance(&dtau1(th).left_mul(&TorusElement::one(th).scale(c(-1.0, 0.0)))) < TOL);
}

#[test]
fn json_roundtrip() {
    let th = golden();
    let x = TorusElement::from_terms(th, &[(1, -2, c(0.5, -1.0)), (0, 0, c(2.0, 0.0))]);
    let j = x.to_json();
    assert_eq!(j["terms"][0], serde_json::json!([0, 0, 2.0, 0.0]));
    assert_eq!(TorusElement::from_json(&j).unwrap(), x);
    assert!(TorusElement::from_json(&serde_json::json!({"theta": 0.1, "terms": [[1, 2, 3.0]]})).is_err());
}

fn sparse(th: f64) -> impl Strategy<Value = TorusElement> {
    prop::collection::vec((-3i64..=3, -3i64..=3, -1.0f64..1.0, -1.0f64..1.0), 1..5).prop_map(move |ts| {
        let terms: Vec<_> = ts.into_iter().map(|(m, n, re, im)| (m, n, c(re, im))).collect();
        TorusElement::from_terms(th, &terms)
    })
}

fn elem() -> impl Strategy<Value = TorusElement> {
    sparse(golden())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity(x in elem(), y in elem(), z in elem()) {
        let lhs = &(&x * &y) * &z;
        let rhs = &x * &(&y * &z);
        prop_assert!(lhs.distance(&rhs) < TOL * 100.0);
    }

    #[test]
    fn star_is_antimultiplicative_involution(x in elem(), y in elem()) {
        prop_assert!((&x * &y).star().distance(&(&y.star() * &x.star())) < TOL * 100.0);
        prop_assert!(x.star().star().distance(&x) < TOL);
    }

    #[test]
    fn derivations(x in elem(), y in elem()) {
        for ax in [Axis::One, Axis::Two] {
            let lhs = (&x * &y).delta(ax);
            let rhs = &(&x.delta(ax) * &y) + &(&x * &y.delta(ax));
            prop_assert!(lhs.distance(&rhs) < 1e-10);
            // ∗-derivation convention δ(b*) = −δ(b)*
            prop_assert!(x.star().delta(ax).distance(&(-&x.delta(ax).star())) < 1e-10);
        }
        let a = x.delta(Axis::One).delta(Axis::Two);
        let b = x.delta(Axis::Two).delta(Axis::One);
        prop_assert!(a.distance(&b) < 1e-10);
    }

    #[test]
    fn calculus(x in elem(), y in elem(), z in elem()) {
        prop_assert!(d_b1(&d_b(&x)).b.max_abs() < 1e-9);
        // d is a ∗-derivation with d(b*) = −d(b)*
        prop_assert!(d_b(&x.star()).distance(&d_b(&x).star().left_mul(&TorusElement::one(x.theta).scale(c(-1.0, 0.0)))) < 1e-10);
        // Leibniz in degree 0
        let lhs = d_b(&(&x * &y));
        let rhs = OneFormB { b1: &d_b(&x).right_mul(&y).b1 + &d_b(&y).left_mul(&x).b1, b2: &d_b(&x).right_mul(&y).b2 + &d_b(&y).left_mul(&x).b2 };
        prop_assert!(lhs.distance(&rhs) < 1e-10);
        // graded Leibniz: d(b·ω) = db∧ω + b·dω and d(ω·b) = dω·b − ω∧db
        let om = OneFormB { b1: y.clone(), b2: z.clone() };
        let lhs = d_b1(&om.left_mul(&x));
        let rhs = &wedge(&d_b(&x), &om).b + &(&x * &d_b1(&om).b);
        prop_assert!(lhs.b.distance(&rhs) < 1e-9);
        let lhs = d_b1(&om.right_mul(&x));
        let rhs = &(&d_b1(&om).b * &x) - &wedge(&om, &d_b(&x)).b;
        prop_assert!(lhs.b.distance(&rhs) < 1e-9);
        // (ω∧ρ)* = −ρ*∧ω*
        let rho = OneFormB { b1: z.clone(), b2: x.clone() };
        prop_assert!(wedge(&om, &rho).star().b.distance(&(-&wedge(&rho.star(), &om.star()).b)) < 1e-10);
    }

    #[test]
    fn central_coefficient_forms_anticommute(a in -1.0f64..1.0, b in -1.0f64..1.0, cc in -1.0f64..1.0, d in -1.0f64..1.0) {
        let th = golden();
        let k = |t: f64| TorusElement::one(th).scale(c(t, 0.0));
        let w = OneFormB { b1: k(a), b2: k(b) };
        let w2 = OneFormB { b1: k(cc), b2: k(d) };
        prop_assert!((&wedge(&w, &w2).b + &wedge(&w2, &w).b).max_abs() < 1e-14);
    }
}
