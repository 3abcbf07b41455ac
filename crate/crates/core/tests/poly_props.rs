mod common;

use common::permutation_det;
use proptest::prelude::*;
use weyl_core::poly::poly_det;
use weyl_core::sample::random_poly;
use weyl_core::scalar::rat;
use weyl_core::{BigRat, MultiIndex, MultiPoly};

fn poly(n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n), -6i64..=6), 0..=5).prop_map(move |terms| {
        MultiPoly::from_terms(n, terms.into_iter().map(|(e, c)| (MultiIndex::new(e), rat(c)))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn mul_commutes_and_associates(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn eval_is_a_ring_morphism(a in poly(2), b in poly(2), x in -4i64..=4, y in -4i64..=4) {
        let pt: Vec<BigRat> = vec![rat(x), rat(y)];
        prop_assert_eq!((&a * &b).eval(&pt).unwrap(), a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
        prop_assert_eq!((&a + &b).eval(&pt).unwrap(), a.eval(&pt).unwrap() + b.eval(&pt).unwrap());
    }

    #[test]
    fn canonical_form_has_no_zeros(a in poly(2), b in poly(2)) {
        for p in [&a * &b, &a - &b, &a + &a] {
            prop_assert!(p.terms().all(|(_, c)| *c != rat(0)));
        }
    }

    #[test]
    fn exact_division_recovers_factor(a in poly(2), b in poly(2)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn det_matches_permutation_expansion(seed in any::<u64>(), dim in 1usize..=4) {
        let mut rng = common::rng(seed);
        let rows: Vec<Vec<MultiPoly>> =
            (0..dim).map(|_| (0..dim).map(|_| random_poly(&mut rng, 2, 2, 3, 4)).collect()).collect();
        prop_assert_eq!(poly_det(&rows).unwrap(), permutation_det(&rows));
    }
}
