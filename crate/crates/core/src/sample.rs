//! Random elements for property checks and the norm-inequality search.
//!
//! Generators take any `rand::Rng`; callers that need reproducibility pass a
//! seeded ChaCha generator.

use rand::Rng;

use crate::index::MultiIndex;
use crate::poly::MultiPoly;
use crate::scalar::rat;
use crate::weyl::{WeylElement, WeylMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleParams {
    pub n: usize,
    pub max_exp: u32,
    pub max_terms: usize,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound] \ {0}`.
    pub coeff_bound: i64,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams { n: 2, max_exp: 3, max_terms: 4, coeff_bound: 5 }
    }
}

const HOMOGENEOUS_TRIES: usize = 64;

pub fn random_index<R: Rng + ?Sized>(rng: &mut R, n: usize, max_exp: u32) -> MultiIndex {
    MultiIndex::new((0..n).map(|_| rng.random_range(0..=max_exp)).collect())
}

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, n: usize, max_exp: u32) -> WeylMonomial {
    WeylMonomial::new(random_index(rng, n, max_exp), random_index(rng, n, max_exp)).expect("same arity")
}

fn random_coeff<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    let bound = bound.max(1);
    let v = rng.random_range(1..=bound);
    if rng.random_bool(0.5) {
        v
    } else {
        -v
    }
}

fn assemble<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams, monos: Vec<WeylMonomial>) -> WeylElement {
    let terms: Vec<_> = monos.into_iter().map(|m| (m, rat(random_coeff(rng, p.coeff_bound)))).collect();
    WeylElement::from_terms(p.n, terms).expect("generated with matching arity")
}

/// Up to `max_terms` random monomials with random coefficients; may be zero
/// if coefficients on a repeated monomial cancel.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> WeylElement {
    let k = rng.random_range(1..=p.max_terms.max(1));
    let monos = (0..k).map(|_| random_monomial(rng, p.n, p.max_exp)).collect();
    assemble(rng, p, monos)
}

pub fn random_nonzero_element<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> WeylElement {
    loop {
        let e = random_element(rng, p);
        if !e.is_zero() {
            return e;
        }
    }
}

fn random_matching<R: Rng + ?Sized>(
    rng: &mut R,
    p: &SampleParams,
    same: impl Fn(&WeylMonomial, &WeylMonomial) -> bool,
) -> WeylElement {
    loop {
        let seed = random_monomial(rng, p.n, p.max_exp);
        let k = rng.random_range(1..=p.max_terms.max(1));
        let mut monos = vec![seed.clone()];
        for _ in 0..HOMOGENEOUS_TRIES {
            if monos.len() >= k {
                break;
            }
            let m = random_monomial(rng, p.n, p.max_exp);
            if same(&seed, &m) {
                monos.push(m);
            }
        }
        let e = assemble(rng, p, monos);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Nonzero element whose terms all share one weight.
pub fn random_weight_homogeneous<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> WeylElement {
    random_matching(rng, p, |a, b| a.weight() == b.weight())
}

/// Nonzero element whose terms all share one multi-weight.
pub fn random_multiweight_homogeneous<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> WeylElement {
    random_matching(rng, p, |a, b| a.multiweight() == b.multiweight())
}

/// Nonzero element all of whose terms have weight `l`, or `None` if no
/// monomial of that weight fits in the exponent box.
pub fn random_with_weight<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams, l: i64) -> Option<WeylElement> {
    let span = (p.n as i64) * i64::from(p.max_exp);
    if l.abs() > span {
        return None;
    }
    let k = rng.random_range(1..=p.max_terms.max(1));
    let mut monos = Vec::with_capacity(k);
    while monos.len() < k {
        // draw β, then place α on the line Σα = Σβ + l
        let beta = random_index(rng, p.n, p.max_exp);
        let target = beta.total() as i64 + l;
        if target < 0 || target > span {
            continue;
        }
        let mut left = target as u32;
        let mut alpha = vec![0u32; p.n];
        for (i, a) in alpha.iter_mut().enumerate() {
            let rest_cap = (p.n - i - 1) as u32 * p.max_exp;
            *a = rng.random_range(left.saturating_sub(rest_cap)..=left.min(p.max_exp));
            left -= *a;
        }
        monos.push(WeylMonomial::new(MultiIndex::new(alpha), beta).expect("same arity"));
    }
    let e = assemble(rng, p, monos);
    if e.is_zero() {
        random_with_weight(rng, p, l)
    } else {
        Some(e)
    }
}

/// Nonzero monomial element `c·x^α ∂^β`.
pub fn random_monomial_element<R: Rng + ?Sized>(rng: &mut R, p: &SampleParams) -> WeylElement {
    let m = random_monomial(rng, p.n, p.max_exp);
    assemble(rng, p, vec![m])
}

/// Random polynomial of total degree at most `max_degree` with up to
/// `max_terms` terms.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, n: usize, max_degree: u32, max_terms: usize, bound: i64) -> MultiPoly {
    let k = rng.random_range(1..=max_terms.max(1));
    let mut terms = Vec::with_capacity(k);
    for _ in 0..k {
        let mut left = max_degree;
        let mut exps = vec![0; n];
        for e in exps.iter_mut() {
            *e = rng.random_range(0..=left);
            left -= *e;
        }
        terms.push((MultiIndex::new(exps), rat(random_coeff(rng, bound))));
    }
    MultiPoly::from_terms(n, terms).expect("generated with matching arity")
}
