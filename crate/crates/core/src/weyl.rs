//! The Weyl algebra `A_n` in its differential-operator model.
//!
//! Elements are stored in the normal-ordered basis `x^α ∂^β` (all
//! multiplications to the left of all derivations). Composition is the
//! γ-sum
//!
//! ```text
//! x^α ∂^β ∘ x^α' ∂^β' = Σ_γ γ! C(β,γ) C(α',γ) x^{α+α'−γ} ∂^{β+β'−γ}
//! ```
//!
//! where only `γ ≤ min(β, α')` contributes.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{multi_binom, multi_factorial};
use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::poly::{push_signed_term, MultiPoly};
use crate::scalar::{int_rat, rat_frac, BigRat};

/// Normal-ordered monomial `x^α ∂^β`.
///
/// Ordered by weight, then `α`, then `β` (both lexicographic), which is the
/// canonical term order for iteration and display.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylMonomial {
    alpha: MultiIndex,
    beta: MultiIndex,
}

impl WeylMonomial {
    pub fn new(alpha: MultiIndex, beta: MultiIndex) -> Result<Self> {
        if alpha.arity() != beta.arity() {
            return Err(Error::ArityMismatch { expected: alpha.arity(), found: beta.arity() });
        }
        Ok(WeylMonomial { alpha, beta })
    }

    /// Shorthand for tests and builders; panics if the vectors differ in
    /// length.
    pub fn from_exps(alpha: &[u32], beta: &[u32]) -> Self {
        WeylMonomial::new(alpha.to_vec().into(), beta.to_vec().into()).expect("alpha and beta differ in length")
    }

    pub fn unit(n: usize) -> Self {
        WeylMonomial { alpha: MultiIndex::zeros(n), beta: MultiIndex::zeros(n) }
    }

    pub fn alpha(&self) -> &MultiIndex {
        &self.alpha
    }

    pub fn beta(&self) -> &MultiIndex {
        &self.beta
    }

    pub fn arity(&self) -> usize {
        self.alpha.arity()
    }

    /// `w = α − β ∈ Zⁿ`.
    pub fn multiweight(&self) -> Vec<i64> {
        self.alpha.diff(&self.beta)
    }

    /// `l = Σ (α_i − β_i)`.
    pub fn weight(&self) -> i64 {
        self.alpha.total() as i64 - self.beta.total() as i64
    }

    pub fn is_diagonal(&self) -> bool {
        self.alpha == self.beta
    }

    /// `x^β ∂^α`.
    pub fn bar(&self) -> Self {
        WeylMonomial { alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    /// Composition of two basis monomials; all coefficients are positive
    /// integers.
    pub fn compose(&self, other: &WeylMonomial) -> Result<WeylElement> {
        let n = self.arity();
        if other.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: other.arity() });
        }
        let mut out = WeylElement::zero(n)?;
        let top_a = self.alpha.add(&other.alpha);
        let top_b = self.beta.add(&other.beta);
        for gamma in MultiIndex::min(&self.beta, &other.alpha).box_below() {
            let c: BigInt =
                multi_factorial(&gamma) * multi_binom(&self.beta, &gamma) * multi_binom(&other.alpha, &gamma);
            let m = WeylMonomial {
                alpha: top_a.checked_sub(&gamma).expect("gamma <= alpha'"),
                beta: top_b.checked_sub(&gamma).expect("gamma <= beta"),
            };
            out.add_term(m, int_rat(c));
        }
        Ok(out)
    }

    /// Splits `x^α ∂^β` into its single-variable parts `x_i^{α_i} ∂_i^{β_i}`.
    pub fn factors(&self) -> Vec<Factor> {
        (0..self.arity())
            .map(|slot| Factor {
                slot,
                monomial: WeylMonomial::from_exps(&[self.alpha.get(slot)], &[self.beta.get(slot)]),
            })
            .collect()
    }

    fn body(&self, n: usize) -> String {
        let name = |prefix: char, i: usize| if n == 1 { prefix.to_string() } else { format!("{prefix}{}", i + 1) };
        let mut parts = Vec::new();
        for (prefix, idx) in [('x', &self.alpha), ('d', &self.beta)] {
            for (i, &e) in idx.entries().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(name(prefix, i)),
                    _ => parts.push(format!("{}^{e}", name(prefix, i))),
                }
            }
        }
        parts.join("*")
    }
}

impl PartialOrd for WeylMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self.body(self.arity());
        if body.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&body)
        }
    }
}

/// Single-variable part of a monomial, an arity-1 monomial living in `slot`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub slot: usize,
    pub monomial: WeylMonomial,
}

impl Factor {
    /// The factor viewed as an element of `A_n`.
    pub fn embed(&self, n: usize) -> WeylMonomial {
        let mut a = vec![0; n];
        let mut b = vec![0; n];
        a[self.slot] = self.monomial.alpha.get(0);
        b[self.slot] = self.monomial.beta.get(0);
        WeylMonomial::from_exps(&a, &b)
    }
}

/// Finite linear combination of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    n: usize,
    terms: BTreeMap<WeylMonomial, BigRat>,
}

impl WeylElement {
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(WeylElement { n, terms: BTreeMap::new() })
    }

    pub fn one(n: usize) -> Result<Self> {
        WeylElement::from_monomial(WeylMonomial::unit(n), BigRat::one())
    }

    pub fn from_monomial(m: WeylMonomial, c: BigRat) -> Result<Self> {
        let mut e = WeylElement::zero(m.arity())?;
        e.add_term(m, c);
        Ok(e)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (WeylMonomial, BigRat)>) -> Result<Self> {
        let mut e = WeylElement::zero(n)?;
        for (m, c) in terms {
            if m.arity() != n {
                return Err(Error::ArityMismatch { expected: n, found: m.arity() });
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    /// The multiplication operator `x_i` (0-based slot).
    pub fn x(n: usize, i: usize) -> Self {
        WeylElement::from_monomial(
            WeylMonomial::new(MultiIndex::unit(n, i), MultiIndex::zeros(n)).unwrap(),
            BigRat::one(),
        )
        .expect("n > 0")
    }

    /// The derivation `∂_i` (0-based slot).
    pub fn d(n: usize, i: usize) -> Self {
        WeylElement::from_monomial(
            WeylMonomial::new(MultiIndex::zeros(n), MultiIndex::unit(n, i)).unwrap(),
            BigRat::one(),
        )
        .expect("n > 0")
    }

    pub fn constant(n: usize, c: BigRat) -> Result<Self> {
        WeylElement::from_monomial(WeylMonomial::unit(n), c)
    }

    fn add_term(&mut self, m: WeylMonomial, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &WeylMonomial) -> BigRat {
        self.terms.get(m).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn check_arity(&self, other: &WeylElement) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.n, found: other.n })
        }
    }

    pub fn try_add(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &BigRat) -> WeylElement {
        if c.is_zero() {
            return WeylElement { n: self.n, terms: BTreeMap::new() };
        }
        WeylElement { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// `X ∘ Y`, the bilinear extension of [`WeylMonomial::compose`].
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement> {
        self.check_arity(other)?;
        let mut out = WeylElement { n: self.n, terms: BTreeMap::new() };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                for (m, k) in m1.compose(m2)?.terms {
                    out.add_term(m, k * &c);
                }
            }
        }
        Ok(out)
    }

    /// `X^k` under composition.
    pub fn pow(&self, k: u32) -> WeylElement {
        let mut acc = WeylElement::one(self.n).expect("n > 0");
        for _ in 0..k {
            acc = acc.compose(self).expect("same arity");
        }
        acc
    }

    /// `[X, Y] = X∘Y − Y∘X`.
    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement> {
        self.compose(other)?.try_sub(&other.compose(self)?)
    }

    /// Component `X_ω` of multi-weight `ω`.
    pub fn project_multiweight(&self, omega: &[i64]) -> WeylElement {
        self.filter(|m| m.multiweight() == omega)
    }

    /// Component of weight `l`.
    pub fn project_weight(&self, l: i64) -> WeylElement {
        self.filter(|m| m.weight() == l)
    }

    fn filter(&self, keep: impl Fn(&WeylMonomial) -> bool) -> WeylElement {
        WeylElement {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Decomposition `X = Σ_ω X_ω` keyed by multi-weight; zero components
    /// are absent.
    pub fn multiweight_components(&self) -> BTreeMap<Vec<i64>, WeylElement> {
        let mut out: BTreeMap<Vec<i64>, WeylElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.multiweight())
                .or_insert_with(|| WeylElement { n: self.n, terms: BTreeMap::new() })
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// Decomposition by weight.
    pub fn weight_components(&self) -> BTreeMap<i64, WeylElement> {
        let mut out: BTreeMap<i64, WeylElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight())
                .or_insert_with(|| WeylElement { n: self.n, terms: BTreeMap::new() })
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The common weight of all terms, or `None` for mixed weights and for
    /// zero.
    pub fn is_homogeneous(&self) -> Option<i64> {
        let mut weights = self.terms.keys().map(WeylMonomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// The common multi-weight, or `None` for mixed multi-weights and zero.
    pub fn homogeneous_multiweight(&self) -> Option<Vec<i64>> {
        let mut ws = self.terms.keys().map(WeylMonomial::multiweight);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// The adjoint `X̄`, swapping `α` and `β` in every monomial.
    pub fn bar(&self) -> WeylElement {
        WeylElement { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.bar(), c.clone())).collect() }
    }

    /// `(X + X̄)/2`.
    pub fn self_part(&self) -> WeylElement {
        (self + &self.bar()).scale(&rat_frac(1, 2))
    }

    /// `(X − X̄)/2`.
    pub fn skew_part(&self) -> WeylElement {
        (self - &self.bar()).scale(&rat_frac(1, 2))
    }

    /// Action on `K[x_1, …, x_n]`:
    /// `x^α ∂^β · x^θ = ∏ θ_i(θ_i−1)⋯(θ_i−β_i+1) · x^{θ−β+α}`.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if p.arity() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: p.arity() });
        }
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            for (theta, k) in p.terms() {
                let Some(rest) = theta.checked_sub(&m.beta) else { continue };
                let falling: BigInt = theta
                    .entries()
                    .iter()
                    .zip(m.beta.entries())
                    .map(|(&t, &b)| ((t - b + 1)..=t).map(BigInt::from).product::<BigInt>())
                    .product();
                terms.push((rest.add(&m.alpha), c * k * int_rat(falling)));
            }
        }
        MultiPoly::from_terms(self.n, terms)
    }
}

impl fmt::Display for WeylElement {
    /// Canonical text such as `3*x1^2*d1 + 1/2*x2*d2^3 - 1`; plain `x`, `d`
    /// when `n = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            push_signed_term(&mut out, i == 0, c, &m.body(self.n));
        }
        f.write_str(&out)
    }
}

// Operator forms panic on arity mismatch.
impl Add<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn add(self, o: &WeylElement) -> WeylElement {
        self.try_add(o).expect("Weyl arity mismatch")
    }
}

impl Sub<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn sub(self, o: &WeylElement) -> WeylElement {
        self.try_sub(o).expect("Weyl arity mismatch")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}
