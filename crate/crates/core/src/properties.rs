//! Cross-module invariants checked with proptest.

use crate::cf_engine::{
    check_determinant, convergents, equivalence_transform, surd_simple_cf, verify_surd_period,
    GcfSpec,
};
use crate::exact_algebra::{
    int, is_perfect_square, rat, BigFloat, Polynomial, PowerSeries, QuadraticSurd, Rational,
};
use crate::interlace::{ab_polynomials, ab_values};
use crate::par::Execution;
use crate::qseries::{is_reduced, truncations};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-20i64..20, 0..7).prop_map(|c| Polynomial::from_i64s(&c))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..15).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, Polynomial::zero());
        prop_assert_eq!(&p * &Polynomial::one(), p.clone());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), v in rational()) {
        prop_assert_eq!((&p + &q).eval(&v), p.eval(&v) + q.eval(&v));
        prop_assert_eq!((&p * &q).eval(&v), p.eval(&v) * q.eval(&v));
        let n = BigInt::from(3);
        prop_assert_eq!(int(p.eval_int(&n)), p.eval(&int(3)));
    }

    #[test]
    fn exact_division_and_gcd(p in poly(), q in poly()) {
        prop_assume!(!q.is_zero());
        let prod = &p * &q;
        prop_assert_eq!(prod.div_exact(&q), Some(p.clone()));
        if !p.is_zero() {
            let g = p.gcd(&q);
            prop_assert!(p.div_exact(&g).is_some());
            prop_assert!(q.div_exact(&g).is_some());
        }
    }

    #[test]
    fn reverse_is_an_involution_on_trimmed(p in poly()) {
        let t = p.trim_low();
        prop_assert_eq!(t.reverse().reverse(), t);
    }

    #[test]
    fn series_reciprocal(c in prop::collection::vec(-9i64..9, 0..8), order in 1usize..20) {
        let mut coeffs = vec![1i64];
        coeffs.extend(c);
        let s = PowerSeries::<Rational>::from_polynomial(&Polynomial::from_i64s(&coeffs), order);
        let inv = s.reciprocal().unwrap();
        prop_assert_eq!(s.mul(&inv), PowerSeries::one(order));
    }

    #[test]
    fn convergent_determinant(terms in prop::collection::vec((1i64..9, 1i64..9), 1..25)) {
        let t = terms.clone();
        let cf = GcfSpec::new(int(1), move |j| (int(t[(j - 1) % t.len()].0), int(t[(j - 1) % t.len()].1)));
        let convs = convergents(&cf, terms.len() + 1);
        prop_assert!(check_determinant(&cf, &convs).is_ok());
    }

    #[test]
    fn equivalence_transform_preserves_values(
        terms in prop::collection::vec((1i64..9, 1i64..9), 1..15),
        scale in prop::collection::vec(1i64..6, 16),
    ) {
        let t = terms.clone();
        let cf = GcfSpec::new(int(2), move |j| (int(t[j - 1].0), int(t[j - 1].1)));
        let r = scale.clone();
        let eq = equivalence_transform(&cf, move |j| if j == 0 { int(1) } else { rat(r[j], 1) }, terms.len()).unwrap();
        let n = terms.len() + 1;
        for (a, b) in convergents(&cf, n).iter().zip(convergents(&eq, n).iter()) {
            prop_assert_eq!(&a.numerator / &a.denominator, &b.numerator / &b.denominator);
        }
    }

    #[test]
    fn surd_expansion_is_periodic(n in 2i64..3000) {
        prop_assume!(!is_perfect_square(&BigInt::from(n)));
        let u = QuadraticSurd::sqrt(n).unwrap();
        let exp = surd_simple_cf(&u, 4000);
        prop_assert!(verify_surd_period(&u, &exp));
    }

    #[test]
    fn bigfloat_tracks_rationals(a in rational(), b in rational()) {
        let prec = 128;
        let (fa, fb) = (BigFloat::from_rational(&a, prec), BigFloat::from_rational(&b, prec));
        let exact = BigFloat::from_rational(&(&a * &b), prec + 64);
        let err = &(&fa * &fb).with_precision(prec + 64) - &exact;
        prop_assert!(err.abs_below_pow2(-100));
        let exact = BigFloat::from_rational(&(&a + &b), prec + 64);
        let err = &(&fa + &fb).with_precision(prec + 64) - &exact;
        prop_assert!(err.abs_below_pow2(-100));
    }

    #[test]
    fn ab_values_match_polynomials(x in 1i64..30, s in 1i64..6) {
        let (x, s) = (BigInt::from(x), BigInt::from(s));
        let seq = ab_polynomials(&s, 20);
        let (a, b) = ab_values(&x, &s, 20);
        for j in 0..=20 {
            prop_assert_eq!(&seq.a(j).eval_int(&x), &a[j]);
            prop_assert_eq!(&seq.b(j).eval_int(&x), &b[j]);
        }
    }
}

#[test]
fn truncations_are_reduced_in_both_modes() {
    let seq = truncations(30, Execution::Sequential);
    let par = truncations(30, Execution::Parallel);
    assert_eq!(seq, par);
    assert!(seq.iter().all(is_reduced));
}
