use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use weyl_core::scalar::{rat_frac, sqrt2_power};
use weyl_core::{BigRat, QSqrt2};

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| rat_frac(n, d))
}

fn qs() -> impl Strategy<Value = QSqrt2> {
    (small_rat(), small_rat()).prop_map(|(a, b)| QSqrt2::new(a, b))
}

fn lowest_terms(r: &BigRat) -> bool {
    r.denom() > &BigInt::from(0) && r.numer().gcd(r.denom()) == BigInt::from(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in qs(), b in qs(), c in qs()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, QSqrt2::zero());
    }

    #[test]
    fn sign_is_multiplicative(a in qs(), b in qs()) {
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
        prop_assert_eq!((-&a).sign(), -a.sign());
        prop_assert_eq!(a.sign() == 1, (-&a).sign() == -1);
        let approx = a.to_f64();
        if approx.abs() > 1e-9 {
            prop_assert_eq!(a.sign(), if approx > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn canonical_rationals(a in qs(), b in qs()) {
        for v in [&a * &b, &a + &b, &a - &b] {
            prop_assert!(lowest_terms(&v.rat) && lowest_terms(&v.irr));
        }
        if let Some(inv) = b.inverse() {
            prop_assert_eq!(&b * &inv, QSqrt2::one());
            prop_assert!(lowest_terms(&inv.rat) && lowest_terms(&inv.irr));
        }
    }

    #[test]
    fn sqrt2_power_adds(l in -20i64..=20, m in -20i64..=20) {
        prop_assert_eq!(&sqrt2_power(l) * &sqrt2_power(m), sqrt2_power(l + m));
    }
}
