//! Sparse multivariate polynomials over `BigRat`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::linalg::{bareiss_det, ExactMatrix, Ring};
use crate::scalar::BigRat;

/// Dimension up to which [`poly_det`] uses cofactor expansion.
pub const COFACTOR_MAX_DIM: usize = 8;

/// Polynomial in a fixed number of variables.
///
/// No zero coefficient is ever stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<MultiIndex, BigRat>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: BigRat) -> Self {
        MultiPoly::monomial(MultiIndex::zeros(arity), c)
    }

    pub fn one(arity: usize) -> Self {
        MultiPoly::constant(arity, BigRat::one())
    }

    /// The variable in slot `i`.
    pub fn var(arity: usize, i: usize) -> Self {
        MultiPoly::monomial(MultiIndex::unit(arity, i), BigRat::one())
    }

    pub fn monomial(exps: MultiIndex, c: BigRat) -> Self {
        let mut p = MultiPoly::zero(exps.arity());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms, merging and dropping
    /// zeros.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (MultiIndex, BigRat)>) -> Result<Self> {
        let mut p = MultiPoly::zero(arity);
        for (e, c) in terms {
            if e.arity() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: e.arity() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: MultiIndex, c: BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &BigRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &MultiIndex) -> BigRat {
        self.terms.get(e).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(MultiIndex::total).max()
    }

    fn check_arity(&self, other: &MultiPoly) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.arity, found: other.arity })
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(other)?;
        let mut out = MultiPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.arity);
        }
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[BigRat]) -> Result<BigRat> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: point.len() });
        }
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.entries()) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &BigRat)> {
        self.terms.last_key_value()
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    ///
    /// If `divisor` divides `self`, the leading term of every intermediate
    /// remainder is divisible by the leading term of `divisor`, so plain
    /// leading-term reduction finds the quotient.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() || self.arity != divisor.arity {
            return None;
        }
        let (de, dc) = divisor.leading_term()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.arity);
        while let Some((re, rc)) = rem.leading_term() {
            let e = re.checked_sub(&de)?;
            let q = MultiPoly::monomial(e, rc / &dc);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Some(quot)
    }

    /// Renders with the given variable names, terms in descending graded
    /// lexicographic order.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.total().cmp(&a.total()).then_with(|| b.cmp(a)));
        let mut out = String::new();
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let factors: Vec<String> = e
                .entries()
                .iter()
                .zip(names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
                .collect();
            push_signed_term(&mut out, idx == 0, c, &factors.join("*"));
        }
        out
    }
}

/// Appends `c*body` to a sum being rendered, using ` + ` / ` - ` separators
/// and eliding unit coefficients.
pub(crate) fn push_signed_term(out: &mut String, first: bool, c: &BigRat, body: &str) {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if body.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(body);
    } else {
        out.push_str(&format!("{mag}*{body}"));
    }
}

/// Default variable names: `x, y, z, t` for up to four variables, else
/// `x1, …, xn`.
pub fn default_names(arity: usize) -> Vec<String> {
    if arity <= 4 {
        ["x", "y", "z", "t"][..arity].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names(self.arity)))
    }
}

// Operator forms panic on arity mismatch; use the `try_*` methods for a
// recoverable error.
impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.try_add(o).expect("polynomial arity mismatch")
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.try_sub(o).expect("polynomial arity mismatch")
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.try_mul(o).expect("polynomial arity mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { arity: self.arity, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.arity)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.arity)
    }
    fn is_zero_element(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        MultiPoly::div_exact(self, o)
    }
    fn determinant(m: &ExactMatrix<Self>) -> Result<Self> {
        poly_det(&m.row_vecs())
    }
}

/// Exact determinant of a square polynomial matrix.
///
/// Cofactor expansion (memoized over used-column sets) up to
/// [`COFACTOR_MAX_DIM`], fraction-free elimination with exact polynomial
/// division above.
pub fn poly_det(rows: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::BadShape);
    }
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: bad.len() });
    }
    let arity = rows[0][0].arity();
    for p in rows.iter().flatten() {
        if p.arity() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: p.arity() });
        }
    }
    if n <= COFACTOR_MAX_DIM {
        Ok(cofactor_det(rows, arity))
    } else {
        bareiss_det(&ExactMatrix::from_rows(rows.to_vec())?)
    }
}

/// Laplace expansion along rows. `partial[mask]` is the signed sum over all
/// placements of the first `popcount(mask)` rows into the columns of `mask`.
fn cofactor_det(rows: &[Vec<MultiPoly>], arity: usize) -> MultiPoly {
    let n = rows.len();
    let full = (1usize << n) - 1;
    let mut partial: Vec<Option<MultiPoly>> = vec![None; 1 << n];
    partial[0] = Some(MultiPoly::one(arity));
    for mask in 0..full {
        let Some(acc) = partial[mask].take() else { continue };
        if acc.is_zero() {
            continue;
        }
        let r = mask.count_ones() as usize;
        for c in 0..n {
            if mask & (1 << c) != 0 || rows[r][c].is_zero() {
                continue;
            }
            // Inversions added by putting row r in column c.
            let negate = (mask >> (c + 1)).count_ones() % 2 == 1;
            let mut term = &acc * &rows[r][c];
            if negate {
                term = -&term;
            }
            let slot = &mut partial[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(prev) => &prev + &term,
                None => term,
            });
        }
    }
    partial[full].take().unwrap_or_else(|| MultiPoly::zero(arity))
}
