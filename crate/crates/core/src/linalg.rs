//! Dense matrices over exact rings.
//!
//! Determinants use fraction-free (Bareiss) elimination, which only ever
//! divides exactly, so integer and polynomial entries never leave their ring.
//! Positive definiteness is certified with Sylvester's criterion.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat_sign, BigRat, QSqrt2};

/// Commutative ring with exact division where the quotient exists.
///
/// Zero and one are produced from an existing element because some rings
/// (polynomials) carry context such as arity.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_element(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// `self / other` if `other` divides `self` exactly.
    fn div_exact(&self, other: &Self) -> Option<Self>;

    fn determinant(m: &ExactMatrix<Self>) -> Result<Self> {
        bareiss_det(m)
    }
}

/// Ring with a decidable sign under a fixed real embedding.
pub trait OrderedRing: Ring {
    fn signum(&self) -> i8;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
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
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
}

impl OrderedRing for BigInt {
    fn signum(&self) -> i8 {
        if Zero::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl Ring for BigRat {
    fn zero_like(&self) -> Self {
        BigRat::zero()
    }
    fn one_like(&self) -> Self {
        BigRat::one()
    }
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
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
        (!Zero::is_zero(o)).then(|| self / o)
    }
}

impl OrderedRing for BigRat {
    fn signum(&self) -> i8 {
        rat_sign(self)
    }
}

impl Ring for QSqrt2 {
    fn zero_like(&self) -> Self {
        QSqrt2::zero()
    }
    fn one_like(&self) -> Self {
        QSqrt2::one()
    }
    fn is_zero_element(&self) -> bool {
        QSqrt2::is_zero(self)
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
        o.inverse().map(|inv| self * &inv)
    }
}

impl OrderedRing for QSqrt2 {
    fn signum(&self) -> i8 {
        self.sign()
    }
}

/// Rectangular, row-major matrix with entries from one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::BadShape);
        }
        Ok(ExactMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::BadShape);
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn row_vecs(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.cols).map(<[R]>::to_vec).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExactMatrix<S> {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Top-left `k × k` submatrix.
    pub fn leading(&self, k: usize) -> Self {
        let mut entries = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { rows: k, cols: k, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::BadShape);
        }
        ExactMatrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.get(i, 0).times(other.get(0, j));
            for l in 1..self.cols {
                acc = acc.plus(&self.get(i, l).times(other.get(l, j)));
            }
            acc
        })
    }

    /// First `(i, j)` with `m[i][j] ≠ m[j][i]`, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn det(&self) -> Result<R> {
        self.require_square()?;
        R::determinant(self)
    }

    /// Determinants of the leading `1×1, 2×2, …, n×n` submatrices.
    pub fn leading_minors(&self) -> Result<Vec<R>> {
        self.require_square()?;
        (1..=self.rows).map(|k| R::determinant(&self.leading(k))).collect()
    }
}

impl<R: OrderedRing> ExactMatrix<R> {
    /// Sylvester's criterion: a symmetric matrix is positive definite iff
    /// every leading principal minor is positive.
    pub fn is_positive_definite(&self) -> Result<bool> {
        self.require_square()?;
        if let Some((row, col)) = self.asymmetry() {
            return Err(Error::Asymmetric { row, col });
        }
        for m in self.leading_minors()? {
            if m.signum() != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Fraction-free Gaussian elimination.
///
/// After step `k` every remaining entry is a `(k+1)×(k+1)` minor of the
/// input, so the division by the previous pivot is always exact.
pub fn bareiss_det<R: Ring>(m: &ExactMatrix<R>) -> Result<R> {
    m.require_square()?;
    let n = m.rows;
    let mut a = m.row_vecs();
    let one = a[0][0].one_like();
    let mut prev = one.clone();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero_element() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero_element()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Ok(one.zero_like()),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::NotDivisible(format!("Bareiss step {k}: {num:?} / {prev:?}")))?;
            }
            a[i][k] = one.zero_like();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { d.negate() } else { d })
}
