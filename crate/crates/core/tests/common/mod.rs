#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weyl_core::linalg::Ring;
use weyl_core::sample::SampleParams;
use weyl_core::scalar::rat;
use weyl_core::{MultiIndex, WeylElement, WeylMonomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn params(n: usize) -> SampleParams {
    SampleParams { n, max_exp: 3, max_terms: 4, coeff_bound: 5 }
}

/// Leibniz expansion over all permutations.
pub fn permutation_det<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = rows[0][0].zero_like();
    loop {
        let mut term = rows[0][0].one_like();
        for (i, &p) in perm.iter().enumerate() {
            term = term.times(&rows[i][p]);
        }
        let inversions =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        acc = if inversions % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
        if !next_permutation(&mut perm) {
            return acc;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn monomial_strategy(n: usize, max_exp: u32) -> impl Strategy<Value = WeylMonomial> {
    (prop::collection::vec(0..=max_exp, n), prop::collection::vec(0..=max_exp, n))
        .prop_map(|(a, b)| WeylMonomial::new(MultiIndex::new(a), MultiIndex::new(b)).unwrap())
}

pub fn element_strategy(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = WeylElement> {
    prop::collection::vec((monomial_strategy(n, max_exp), -5i64..=5), 1..=max_terms)
        .prop_map(move |terms| WeylElement::from_terms(n, terms.into_iter().map(|(m, c)| (m, rat(c)))).unwrap())
}

pub fn mono(a: &[u32], b: &[u32]) -> WeylElement {
    WeylElement::from_monomial(WeylMonomial::from_exps(a, b), rat(1)).unwrap()
}
