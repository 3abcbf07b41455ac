mod common;

use common::{mono, params, rng};
use num_bigint::BigInt;
use proptest::prelude::*;
use weyl_core::combinatorics::fubini;
use weyl_core::forms::{build_n, euclid, frob, frob_pair_closed, gram_euclid, norm2, shifted_euler_basis, trace};
use weyl_core::sample::{
    random_element, random_monomial, random_nonzero_element, random_weight_homogeneous, random_with_weight,
};
use weyl_core::scalar::{int_rat, pow2, sqrt2_power};
use weyl_core::{QSqrt2, WeylElement, WeylMonomial};

fn arity(seed: u64) -> usize {
    1 + (seed % 2) as usize
}

/// Weight-homogeneous `X` and `Y` with `l(X) + l(Y) = 0`, so the pairing is
/// not trivially zero.
fn balanced_pair(seed: u64) -> (WeylElement, WeylElement) {
    let mut r = rng(seed);
    let p = params(arity(seed));
    loop {
        let x = random_weight_homogeneous(&mut r, &p);
        let l = x.is_homogeneous().unwrap();
        if let Some(y) = random_with_weight(&mut r, &p, -l) {
            return (x, y);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn twisted_symmetry(seed in any::<u64>()) {
        let (x, y) = balanced_pair(seed);
        let lx = x.is_homogeneous().unwrap();
        let ly = y.is_homogeneous().unwrap();
        let xy = frob(&x, &y).unwrap();
        let yx = frob(&y, &x).unwrap();
        prop_assert_eq!(xy.clone(), pow2(ly) * &yx);
        prop_assert_eq!(sqrt2_power(lx).scale(&xy), sqrt2_power(ly).scale(&yx));
        prop_assert_eq!(frob(&x.bar(), &y.bar()).unwrap(), yx);
    }

    #[test]
    fn twisted_symmetry_unbalanced(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let x = random_weight_homogeneous(&mut r, &p);
        let y = random_weight_homogeneous(&mut r, &p);
        let ly = y.is_homogeneous().unwrap();
        prop_assert_eq!(frob(&x, &y).unwrap(), pow2(ly) * frob(&y, &x).unwrap());
    }

    #[test]
    fn adjoint_swaps_arguments(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let x = random_element(&mut r, &p);
        let y = random_element(&mut r, &p);
        prop_assert_eq!(frob(&x.bar(), &y.bar()).unwrap(), frob(&y, &x).unwrap());
    }

    #[test]
    fn frobenius_form_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let (x, y, z) = (random_element(&mut r, &p), random_element(&mut r, &p), random_element(&mut r, &p));
        prop_assert_eq!(frob(&x.compose(&y).unwrap(), &z).unwrap(), frob(&x, &y.compose(&z).unwrap()).unwrap());
    }

    #[test]
    fn trace_vanishes_off_weight_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let x = random_element(&mut r, &p);
        prop_assert_eq!(trace(&x), trace(&x.bar()));
        let h = random_weight_homogeneous(&mut r, &p);
        if h.is_homogeneous() != Some(0) {
            prop_assert_eq!(trace(&h), int_rat(BigInt::from(0)));
        }
    }

    #[test]
    fn euclid_symmetries(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let x = random_element(&mut r, &p);
        let y = random_element(&mut r, &p);
        let v = euclid(&x, &y).unwrap();
        prop_assert_eq!(v.clone(), euclid(&y, &x).unwrap());
        prop_assert_eq!(v, euclid(&x.bar(), &y.bar()).unwrap());
    }

    #[test]
    fn euclid_invariance(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let a = random_weight_homogeneous(&mut r, &p);
        let la = a.is_homogeneous().unwrap();
        let x = random_element(&mut r, &p);
        // bias Y toward overlapping a∘X and X∘a so both sides are usually nonzero
        let noise = random_element(&mut r, &p);
        let y_left = &a.compose(&x).unwrap() + &noise;
        let y_right = &x.compose(&a).unwrap() + &noise;
        let ab = a.bar();
        prop_assert_eq!(
            euclid(&a.compose(&x).unwrap(), &y_left).unwrap(),
            &sqrt2_power(-la) * &euclid(&x, &ab.compose(&y_left).unwrap()).unwrap()
        );
        prop_assert_eq!(
            euclid(&x.compose(&a).unwrap(), &y_right).unwrap(),
            &sqrt2_power(la) * &euclid(&x, &y_right.compose(&ab).unwrap()).unwrap()
        );
    }

    #[test]
    fn commutator_adjoint(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let a = random_weight_homogeneous(&mut r, &p);
        let la = a.is_homogeneous().unwrap();
        let x = random_element(&mut r, &p);
        let y = &a.commutator(&x).unwrap() + &random_element(&mut r, &p);
        let ab = a.bar();
        let lhs = euclid(&a.commutator(&x).unwrap(), &y).unwrap();
        let rhs = &(&sqrt2_power(-la) * &euclid(&x, &ab.compose(&y).unwrap()).unwrap())
            - &(&sqrt2_power(la) * &euclid(&x, &y.compose(&ab).unwrap()).unwrap());
        prop_assert_eq!(lhs.clone(), rhs);
        if la == 0 {
            prop_assert_eq!(lhs, euclid(&x, &ab.commutator(&y).unwrap()).unwrap());
        }
    }

    #[test]
    fn weight_zero_commutator_adjoint(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let a = random_with_weight(&mut r, &p, 0).unwrap();
        let x = random_element(&mut r, &p);
        let y = &a.commutator(&x).unwrap() + &random_element(&mut r, &p);
        prop_assert_eq!(
            euclid(&a.commutator(&x).unwrap(), &y).unwrap(),
            euclid(&x, &a.bar().commutator(&y).unwrap()).unwrap()
        );
    }

    #[test]
    fn self_and_skew_are_orthogonal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let x = random_element(&mut r, &p);
        let y = random_element(&mut r, &p);
        prop_assert!(euclid(&x.self_part(), &y.skew_part()).unwrap().is_zero());
        prop_assert!(euclid(&x.skew_part(), &y.self_part()).unwrap().is_zero());
    }

    #[test]
    fn pythagoras_over_weights(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let x = random_element(&mut r, &p);
        let by_multiweight: QSqrt2 = x.multiweight_components().values().map(norm2).sum();
        let by_weight: QSqrt2 = x.weight_components().values().map(norm2).sum();
        prop_assert_eq!(norm2(&x), by_multiweight);
        prop_assert_eq!(norm2(&x), by_weight);
    }

    #[test]
    fn decomposable_product(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_monomial(&mut r, 2, 3);
        let mut y = random_monomial(&mut r, 2, 3);
        if seed % 3 == 0 {
            // same multi-weight, so the product is usually nonzero
            let shift = (seed / 3 % 3) as u32;
            y = WeylMonomial::from_exps(
                &[x.alpha().get(0) + shift, x.alpha().get(1)],
                &[x.beta().get(0) + shift, x.beta().get(1)],
            );
        }
        let whole = euclid(&to_el(&x), &to_el(&y)).unwrap();
        let parts = x
            .factors()
            .iter()
            .zip(y.factors())
            .map(|(fx, fy)| euclid(&to_el(&fx.monomial), &to_el(&fy.monomial)).unwrap())
            .fold(QSqrt2::one(), |acc, v| &acc * &v);
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn norms_are_positive(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_nonzero_element(&mut r, &params(arity(seed)));
        prop_assert_eq!(norm2(&x).sign(), 1);
    }

    #[test]
    fn cauchy_schwarz(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = params(arity(seed));
        let x = random_element(&mut r, &p);
        let y = if seed % 2 == 0 { &x.scale(&int_rat(3.into())) + &random_element(&mut r, &p) } else { random_element(&mut r, &p) };
        let e = euclid(&x, &y).unwrap();
        let gap = &(&norm2(&x) * &norm2(&y)) - &(&e * &e);
        prop_assert!(gap.sign() >= 0);
    }
}

fn to_el(m: &WeylMonomial) -> WeylElement {
    WeylElement::from_monomial(m.clone(), int_rat(1.into())).unwrap()
}

fn all_monomials(n: usize, max_exp: u32) -> Vec<WeylMonomial> {
    let top = weyl_core::MultiIndex::new(vec![max_exp; n]);
    top.box_below().flat_map(|a| top.box_below().map(move |b| WeylMonomial::new(a.clone(), b).unwrap())).collect()
}

#[test]
fn closed_form_pairing_one_variable() {
    for x in all_monomials(1, 4) {
        for y in all_monomials(1, 4) {
            let direct = frob(&to_el(&x), &to_el(&y)).unwrap();
            let closed = frob_pair_closed(x.alpha(), x.beta(), y.alpha(), y.beta()).unwrap();
            assert_eq!(direct, closed, "{x} , {y}");
            let wsum: Vec<i64> = x.multiweight().iter().zip(y.multiweight()).map(|(a, b)| a + b).collect();
            if wsum.iter().any(|&w| w != 0) {
                assert_eq!(direct, int_rat(0.into()));
            }
        }
    }
}

#[test]
fn euler_powers_pair_to_fubini() {
    let e = mono(&[1], &[1]);
    for k in 0..=8u32 {
        for i in 0..=k {
            let v = euclid(&e.pow(i), &e.pow(k - i)).unwrap();
            assert_eq!(v, QSqrt2::from_rat(int_rat(fubini(k as usize))), "k={k} i={i}");
        }
    }
}

#[test]
fn gram_of_shifted_basis_is_scaled_n() {
    for a in 0..=3 {
        for k in 0..=4 {
            let g = gram_euclid(&shifted_euler_basis(a, k)).unwrap();
            let expected = build_n(a, k).map(|v| sqrt2_power(i64::from(a)).scale(&int_rat(v.clone())));
            assert_eq!(g, expected, "a={a} k={k}");
        }
    }
}

#[test]
fn small_gram_is_positive_definite() {
    let basis = all_monomials(1, 2);
    let g = gram_euclid(&basis).unwrap();
    assert!(g.is_positive_definite().unwrap());
}
