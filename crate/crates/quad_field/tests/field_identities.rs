use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quad_field::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn contexts() -> Vec<QuadContext> {
    vec![
        QuadContext::new(QuadraticIrrational::golden()).unwrap(),
        QuadContext::new(QuadraticIrrational::sqrt2()).unwrap(),
        QuadContext::new(QuadraticIrrational::one_plus_sqrt3()).unwrap(),
    ]
}

/// Oracle: smallest coprime triple with |a|,|b|,|c| ≤ 12 and a·x² − b·x + c ≈ 0,
/// with the root chosen as (b+√Δ)/(2a).
fn brute_triple(x: f64) -> Option<(i64, i64, i64)> {
    for a in (-12i64..=12).filter(|a| *a != 0) {
        for b in -12i64..=12 {
            for c in -12i64..=12 {
                let disc = b * b - 4 * a * c;
                if disc <= 0 {
                    continue;
                }
                let root = (b as f64 + (disc as f64).sqrt()) / (2.0 * a as f64);
                let g = num_integer::gcd(num_integer::gcd(a, b), c);
                if g.abs() == 1 && (root - x).abs() < 1e-12 {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

#[test]
fn classify_matches_brute_force() {
    let cases = [(q(1, 2), q(1, 2), 5, (1.0 + 5f64.sqrt()) / 2.0), (q(0, 1), q(1, 1), 2, 2f64.sqrt()), (q(1, 1), q(1, 1), 3, 1.0 + 3f64.sqrt()), (q(1, 2), q(-1, 2), 7, (1.0 - 7f64.sqrt()) / 2.0)];
    for (p, qq, d, x) in cases {
        let t = classify(&p, &qq, &BigInt::from(d)).unwrap();
        let (a, b, c) = brute_triple(x).expect("oracle finds a triple");
        assert_eq!((t.a.clone(), t.b.clone(), t.c.clone()), (a.into(), b.into(), c.into()), "θ={x}");
        assert!(t.relation_holds());
        assert!((t.to_f64() - x).abs() < 1e-12);
    }
    let g = classify(&q(1, 2), &q(1, 2), &5.into()).unwrap();
    assert_eq!(g, QuadraticIrrational::new(1, 1, -1).unwrap());
    assert_eq!(g.delta, BigInt::from(5));
    let s = classify(&q(0, 1), &q(1, 1), &2.into()).unwrap();
    assert_eq!(s.delta, BigInt::from(8));
}

#[test]
fn classify_rejects_rational_inputs() {
    assert!(matches!(classify(&q(0, 1), &q(1, 1), &4.into()), Err(QuadError::NonQuadratic(_))));
    assert!(matches!(classify(&q(1, 1), &q(0, 1), &5.into()), Err(QuadError::NonQuadratic(_))));
}

#[test]
fn norm_examples() {
    assert_eq!(FieldElement::from_ints(1, 0, 5).norm(), q(1, 1));
    let g = FieldElement::new(q(1, 2), q(1, 2), 5.into());
    assert_eq!(g.norm(), q(-1, 1));
    assert_eq!(FieldElement::from_ints(3, 1, 8).norm(), q(1, 1));
}

/// Oracle: plain u64 scan for u² = 4 + Δv².
fn brute_pell(delta: u64) -> (u64, u64) {
    for v in 1u64.. {
        let t = 4 + delta * v * v;
        let u = (t as f64).sqrt().round() as u64;
        for w in u.saturating_sub(1)..=u + 1 {
            if w * w == t {
                return (w, v);
            }
        }
    }
    unreachable!()
}

#[test]
fn pell_unit_matches_scan() {
    for (delta, expect) in [(5u64, (3u64, 1u64)), (8, (6, 2)), (12, (4, 1)), (13, (11, 3)), (21, (5, 1))] {
        let e = pell_unit(&BigInt::from(delta)).unwrap();
        assert_eq!(brute_pell(delta), expect);
        assert_eq!((e.u.clone(), e.v.clone()), (BigInt::from(expect.0), BigInt::from(expect.1)));
        assert_eq!(e.value().norm(), q(1, 1));
    }
    assert_eq!(pell_unit(&5.into()).unwrap().to_string(), "(3+√5)/2");
    assert_eq!(pell_unit(&8.into()).unwrap().to_string(), "3+2√2");
    assert_eq!(pell_unit(&12.into()).unwrap().to_string(), "2+√3");
    assert!(matches!(pell_unit(&9.into()), Err(QuadError::InvalidDiscriminant(_))));
    assert!(matches!(pell_unit_with_bound(&BigInt::from(13), 2), Err(QuadError::SearchExhausted(2))));
}

#[test]
fn fundamental_unit_can_have_negative_norm() {
    let f = fundamental_unit(&5.into()).unwrap();
    assert_eq!(f.to_string(), "(1+√5)/2");
    assert_eq!(f.norm(), BigInt::from(-1));
    let p = pell_unit(&5.into()).unwrap();
    assert_eq!(f.value().pow(2).unwrap(), p.value());
    let f8 = fundamental_unit(&8.into()).unwrap();
    assert_eq!(f8.to_string(), "1+√2");
    assert_eq!(f8.value().pow(2).unwrap(), pell_unit(&8.into()).unwrap().value());
}

#[test]
fn phi_examples() {
    let g = QuadraticIrrational::golden();
    let m = phi(&pell_unit(&g.delta).unwrap(), &g).unwrap();
    assert_eq!(m, StabilizerMatrix::new(2, 1, 1, 1));
    let th = g.to_f64();
    assert!(((2.0 * th + 1.0) / (th + 1.0) - th).abs() < 1e-14);

    let s = QuadraticIrrational::sqrt2();
    let m = phi(&pell_unit(&s.delta).unwrap(), &s).unwrap();
    assert_eq!(m, StabilizerMatrix::new(3, 4, 2, 3));
    let r2 = 2f64.sqrt();
    assert!(((3.0 * r2 + 4.0) / (2.0 * r2 + 3.0) - r2).abs() < 1e-14);

    assert_eq!(phi(&OrderUnit::one(&g.delta), &g).unwrap(), StabilizerMatrix::identity());

    let bad = OrderUnit { u: 3.into(), v: 1.into(), delta: 8.into() };
    assert!(phi(&bad, &s).is_err());
}

#[test]
fn phi_inverse_examples() {
    let g = QuadraticIrrational::golden();
    let x = phi_inverse(&StabilizerMatrix::new(2, 1, 1, 1), &g).unwrap();
    assert_eq!(x, pell_unit(&g.delta).unwrap().value());
    assert_eq!(x.to_string(), "(3+√5)/2");
    assert_eq!(phi_inverse(&StabilizerMatrix::identity(), &g).unwrap(), FieldElement::one(&g.delta));
    assert_eq!(phi_inverse(&StabilizerMatrix::new(0, -1, 1, 0), &g), Err(QuadError::NotStabilizer));
}

#[test]
fn unit_power_examples() {
    let ctx = QuadContext::golden();
    assert_eq!(ctx.power(0).matrix(), StabilizerMatrix::identity());
    assert_eq!(ctx.power(1).matrix(), StabilizerMatrix::new(2, 1, 1, 1));
    assert_eq!(ctx.power(2).matrix(), StabilizerMatrix::new(5, 3, 3, 2));
    assert_eq!(ctx.power(-1).matrix(), StabilizerMatrix::new(1, -1, -1, 2));
}

#[test]
fn phi_is_a_homomorphism_on_powers() {
    for ctx in contexts() {
        for m in -6..=6 {
            for n in -6..=6 {
                let lhs = ctx.power(m + n).matrix();
                let rhs = ctx.power(m).matrix().mul(&ctx.power(n).matrix());
                assert_eq!(lhs, rhs);
            }
            let g = ctx.power(m).matrix();
            assert_eq!(g.det(), BigInt::from(1));
            assert!(g.fixes(&ctx.theta));
            assert_eq!(phi(&OrderUnit::one(&ctx.theta.delta), &ctx.theta).unwrap(), StabilizerMatrix::identity());
            assert_eq!(phi_inverse(&g, &ctx.theta).unwrap(), ctx.eps_pow(m));
        }
    }
}

#[test]
fn c_theta_plus_d_is_the_unit_power() {
    for ctx in contexts() {
        let th = ctx.theta.theta();
        for m in -6..=6 {
            let p = ctx.power(m);
            let lhs = &(&ctx.rational(BigRational::from_integer(p.c.clone())) * &th)
                + &ctx.rational(BigRational::from_integer(p.d.clone()));
            assert_eq!(lhs, ctx.eps_pow(m));
            assert_eq!(p.c == BigInt::from(0), m == 0);
        }
    }
}

#[test]
fn c_cocycle_identity() {
    for ctx in contexts() {
        for m in -6..=6 {
            for n in -6..=6 {
                let lhs = ctx.c(m + n);
                let rhs = &(&ctx.c(m) * &ctx.eps_pow(-n)) + &(&ctx.eps_pow(m) * &ctx.c(n));
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }
}

#[test]
fn scaled_c_closed_form() {
    for ctx in contexts() {
        let e = &ctx.eps;
        let k = (e * &ctx.c(1)).div(&(&(e * e) - &ctx.int(1))).unwrap();
        for m in -6..=6 {
            let lhs = &ctx.eps_pow(-m) * &ctx.c(m);
            let rhs = &(&ctx.int(1) - &ctx.eps_pow(-2 * m)) * &k;
            assert_eq!(lhs, rhs, "m={m}");
        }
    }
}

fn small_elem() -> impl Strategy<Value = FieldElement> {
    (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
        .prop_map(|(a, b, c, d)| FieldElement::new(q(a, b), q(c, d), 12.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn norm_is_multiplicative(x in small_elem(), y in small_elem()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn inverse_roundtrip(x in small_elem()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(&x * &x.inv().unwrap(), FieldElement::one(&x.delta));
    }

    #[test]
    fn float_value_tracks_exact_sign(x in small_elem()) {
        let v = x.to_f64();
        match x.signum() {
            std::cmp::Ordering::Greater => prop_assert!(v > 0.0),
            std::cmp::Ordering::Less => prop_assert!(v < 0.0),
            std::cmp::Ordering::Equal => prop_assert!(v == 0.0),
        }
    }
}
