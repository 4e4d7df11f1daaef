use num::{BigRational, One, Zero};
use proptest::prelude::*;
use slgt_core::{sqrt_rational, squarefree_decompose, RadicalScalar};

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn scalar() -> impl Strategy<Value = RadicalScalar> {
    prop::collection::vec((prop::sample::select(vec![1u64, 2, 3, 5, 6, 7, 10, 14, 15, 21]), rational()), 0..4)
        .prop_map(RadicalScalar::from_terms)
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + b.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RadicalScalar::one(), a.clone());
        prop_assert_eq!(&a + &RadicalScalar::zero(), a.clone());
    }

    #[test]
    fn inverse(a in scalar()) {
        prop_assume!(!a.is_zero());
        let inv = a.invert().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!(near(inv.to_f64(), 1.0 / a.to_f64()));
    }

    #[test]
    fn float_image_is_a_ring_map(a in scalar(), b in scalar()) {
        prop_assert!(near((&a * &b).to_f64(), a.to_f64() * b.to_f64()));
        prop_assert!(near((&a + &b).to_f64(), a.to_f64() + b.to_f64()));
    }

    #[test]
    fn sqrt_squares_back(r in 1u64..100_000) {
        let s = RadicalScalar::sqrt_of(r);
        prop_assert_eq!(s.square(), RadicalScalar::from_integer(r as i64));
        prop_assert!(near(s.to_f64(), (r as f64).sqrt()));
    }

    #[test]
    fn sqrt_of_rational(n in 0i64..5000, d in 1i64..500) {
        let q = BigRational::new(n.into(), d.into());
        let s = sqrt_rational(&q).unwrap();
        prop_assert!(s.num_terms() <= 1);
        prop_assert_eq!(s.square(), RadicalScalar::from_rational(q));
    }

    #[test]
    fn negative_rational_has_no_root(n in 1i64..5000, d in 1i64..500) {
        prop_assert!(sqrt_rational(&BigRational::new((-n).into(), d.into())).is_err());
    }

    #[test]
    fn squarefree_parts(n in 1u64..1_000_000) {
        let (s, f) = squarefree_decompose(n);
        prop_assert_eq!(s * s * f, n);
        let mut p = 2;
        while p * p <= f {
            prop_assert!(f % (p * p) != 0);
            p += 1;
        }
    }

    #[test]
    fn canonical_form_is_unique(a in scalar()) {
        for (d, c) in a.terms() {
            prop_assert!(!c.is_zero());
            prop_assert_eq!(squarefree_decompose(d).1, d);
        }
        let rebuilt = RadicalScalar::from_terms(a.terms().map(|(d, c)| (d, c.clone())));
        prop_assert_eq!(rebuilt, a.clone());
    }

    #[test]
    fn json_round_trip(a in scalar()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: RadicalScalar = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn zero_has_no_inverse() {
    assert!(RadicalScalar::zero().invert().is_err());
    assert_eq!(RadicalScalar::one().as_rational(), Some(BigRational::one()));
    assert!(RadicalScalar::zero().checked_div(&RadicalScalar::zero()).is_err());
}
