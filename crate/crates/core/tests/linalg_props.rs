mod common;

use common::permutation_det;
use num_bigint::BigInt;
use proptest::prelude::*;
use weyl_core::linalg::OrderedRing;
use weyl_core::scalar::rat_frac;
use weyl_core::{BigRat, ExactMatrix};

fn int_matrix(dim: usize) -> impl Strategy<Value = ExactMatrix<BigInt>> {
    prop::collection::vec(-9i64..=9, dim * dim)
        .prop_map(move |v| ExactMatrix::from_fn(dim, dim, |i, j| BigInt::from(v[i * dim + j])).unwrap())
}

fn sym_rat_matrix() -> impl Strategy<Value = ExactMatrix<BigRat>> {
    (1usize..=4).prop_flat_map(|dim| {
        prop::collection::vec((-6i64..=6, 1i64..=3), dim * dim).prop_map(move |v| {
            let at = |i: usize, j: usize| {
                let (a, b) = (i.min(j), i.max(j));
                let (n, d) = v[a * dim + b];
                // bias the diagonal so both verdicts occur
                let bump = if i == j { 4 } else { 0 };
                rat_frac(n + bump * d, d)
            };
            ExactMatrix::from_fn(dim, dim, at).unwrap()
        })
    })
}

/// Symmetric Gaussian elimination without pivoting: positive definite iff
/// every pivot is positive.
fn ldl_positive(m: &ExactMatrix<BigRat>) -> bool {
    let n = m.rows();
    let mut a = m.row_vecs();
    for k in 0..n {
        if a[k][k].signum() != 1 {
            return false;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            let pivot_row = a[k].clone();
            for (dst, src) in a[i].iter_mut().zip(&pivot_row).skip(k) {
                *dst -= &f * src;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bareiss_matches_leibniz(m in (1usize..=4).prop_flat_map(int_matrix)) {
        prop_assert_eq!(m.det().unwrap(), permutation_det(&m.row_vecs()));
        let r = m.map(|v| BigRat::from_integer(v.clone()));
        prop_assert_eq!(r.det().unwrap(), BigRat::from_integer(m.det().unwrap()));
    }

    #[test]
    fn det_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn sylvester_agrees_with_pivot_signs(m in sym_rat_matrix()) {
        prop_assert_eq!(m.is_positive_definite().unwrap(), ldl_positive(&m));
    }
}
