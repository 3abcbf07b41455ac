//! Factorials, binomials, Stirling and Fubini numbers, and the polynomial
//! and binomial identities that the form computations rest on.
//!
//! Out-of-range binomials are zero, so every displayed sum is finite without
//! extra bounds bookkeeping.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::poly::MultiPoly;
use crate::scalar::int_rat;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero unless `0 ≤ k ≤ n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn binom_u(n: u32, k: u32) -> BigInt {
    binom(i64::from(n), i64::from(k))
}

/// `C(α, β) = ∏ C(α_i, β_i)`.
pub fn multi_binom(alpha: &MultiIndex, beta: &MultiIndex) -> BigInt {
    alpha.entries().iter().zip(beta.entries()).map(|(&a, &b)| binom_u(a, b)).product()
}

/// `α! = ∏ α_i!`.
pub fn multi_factorial(alpha: &MultiIndex) -> BigInt {
    alpha.entries().iter().map(|&a| factorial(u64::from(a))).product()
}

/// Row `k` of the Stirling triangle of the second kind: `s(k, 0..=k)`.
pub fn stirling2_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=k {
        let mut next = vec![BigInt::zero(); m + 1];
        for j in 1..=m {
            let carry = if j < m { &row[j] * j } else { BigInt::zero() };
            next[j] = carry + &row[j - 1];
        }
        row = next;
    }
    row
}

/// Stirling number of the second kind via `s(k,j) = j·s(k−1,j) + s(k−1,j−1)`.
pub fn stirling2(k: usize, j: usize) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    stirling2_row(k).swap_remove(j)
}

/// Number of ordered set partitions of a `k`-set, `Σ_j s(k,j)·j!`.
pub fn fubini(k: usize) -> BigInt {
    stirling2_row(k).into_iter().enumerate().map(|(j, s)| s * factorial(j as u64)).sum()
}

fn mono3(x: u32, y: u32, z: u32, c: BigInt) -> MultiPoly {
    MultiPoly::monomial(MultiIndex::new(vec![x, y, z]), int_rat(c))
}

/// Both sides of
/// `Σ_{i,a,b} C(n,b)C(b,i)C(n−i,a)(x+1)^a x^i y^a z^b = (1+(1+x)(y+z+yz))^n`
/// in variables `(x, y, z)`.
pub fn lemma1_sides(n: u32) -> (MultiPoly, MultiPoly) {
    let x = MultiPoly::var(3, 0);
    let y = MultiPoly::var(3, 1);
    let z = MultiPoly::var(3, 2);
    let one = MultiPoly::one(3);
    let x1 = &x + &one;
    let mut lhs = MultiPoly::zero(3);
    for b in 0..=n {
        for i in 0..=b {
            for a in 0..=(n - i) {
                let c = binom_u(n, b) * binom_u(b, i) * binom_u(n - i, a);
                if c.is_zero() {
                    continue;
                }
                lhs = &lhs + &(&x1.pow(a) * &mono3(i, a, b, c));
            }
        }
    }
    let yz = &(&y + &z) + &(&y * &z);
    let rhs = (&one + &(&x1 * &yz)).pow(n);
    (lhs, rhs)
}

pub fn lemma1_check(n: u32) -> bool {
    let (l, r) = lemma1_sides(n);
    l == r
}

/// Both sides of `Σ_i 2^a C(n,b)C(b,i)C(n−i,a) = Σ_i 2^b C(n,a)C(a,i)C(n−i,b)`.
pub fn corollary2_sides(n: u32, a: u32, b: u32) -> (BigInt, BigInt) {
    let side = |a: u32, b: u32| -> BigInt {
        let s: BigInt = (0..=n).map(|i| binom_u(n, b) * binom_u(b, i) * binom_u(n - i, a)).sum();
        s << a
    };
    (side(a, b), side(b, a))
}

pub fn corollary2_check(n: u32, a: u32, b: u32) -> bool {
    let (l, r) = corollary2_sides(n, a, b);
    l == r
}

/// Denominator-cleared sides of the weighted binomial symmetry
/// `2^{‖α‖} C(θ,β) Σ_γ C(θ−γ,α)C(β,γ) = 2^{‖β‖} C(θ,α) Σ_γ C(θ−γ,β)C(α,γ)`.
pub fn lemma3_sides(alpha: &MultiIndex, beta: &MultiIndex, theta: &MultiIndex) -> Result<(BigInt, BigInt)> {
    let n = alpha.arity();
    for m in [beta, theta] {
        if m.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: m.arity() });
        }
    }
    let inner = |a: &MultiIndex, b: &MultiIndex| -> BigInt {
        b.box_below()
            .map(|g| {
                (0..n)
                    .map(|i| {
                        binom(i64::from(theta.get(i)) - i64::from(g.get(i)), i64::from(a.get(i)))
                            * binom_u(b.get(i), g.get(i))
                    })
                    .product::<BigInt>()
            })
            .sum()
    };
    let lhs = (multi_binom(theta, beta) * inner(alpha, beta)) << alpha.total();
    let rhs = (multi_binom(theta, alpha) * inner(beta, alpha)) << beta.total();
    Ok((lhs, rhs))
}

pub fn lemma3_check(alpha: &MultiIndex, beta: &MultiIndex, theta: &MultiIndex) -> Result<bool> {
    let (l, r) = lemma3_sides(alpha, beta, theta)?;
    Ok(l == r)
}

/// Both sides of `Σ_j C(a,j)C(a+b−j,a+c) t^j = Σ_i C(a,i)C(b,i+c)(t+1)^i`
/// as univariate polynomials in `t`.
pub fn lemma100_sides(a: u32, b: u32, c: u32) -> (MultiPoly, MultiPoly) {
    let t = MultiPoly::var(1, 0);
    let t1 = &t + &MultiPoly::one(1);
    let (a_, b_, c_) = (i64::from(a), i64::from(b), i64::from(c));
    let mut lhs = MultiPoly::zero(1);
    let mut rhs = MultiPoly::zero(1);
    for j in 0..=a_ {
        let coeff = binom(a_, j) * binom(a_ + b_ - j, a_ + c_);
        lhs = &lhs + &MultiPoly::monomial(MultiIndex::new(vec![j as u32]), int_rat(coeff));
    }
    for i in 0..=a_ {
        let coeff = binom(a_, i) * binom(b_, i + c_);
        if !coeff.is_zero() {
            rhs = &rhs + &t1.pow(i as u32).scale(&int_rat(coeff));
        }
    }
    (lhs, rhs)
}

pub fn lemma100_check(a: u32, b: u32, c: u32) -> bool {
    let (l, r) = lemma100_sides(a, b, c);
    l == r
}

/// `d_{a,b}^{(c)} = Σ_{i=0}^b C(b,i)C(a+b−i,b+c) x^{a−i} y^{b−i} z^i`.
///
/// Terms with `i > a` would carry a negative power of `x`; their binomial
/// `C(a+b−i, b+c)` is zero there because `a+b−i < b ≤ b+c`, so they are
/// skipped.
pub fn d_poly(a: u32, b: u32, c: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(3);
    for i in 0..=b.min(a) {
        let coeff = binom_u(b, i) * binom_u(a + b - i, b + c);
        if !coeff.is_zero() {
            p = &p + &mono3(a - i, b - i, i, coeff);
        }
    }
    p
}

/// `d̃_{a,b}^{(c)} = Σ_{i=0}^b C(b,i)C(a,i+c) x^{a−i} y^{b−i} (z+xy)^i`.
///
/// `C(a, i+c)` vanishes for `i > a`, so the range stops at `min(a, b)`.
pub fn d_tilde_poly(a: u32, b: u32, c: u32) -> MultiPoly {
    let xy_z = &(&MultiPoly::var(3, 0) * &MultiPoly::var(3, 1)) + &MultiPoly::var(3, 2);
    let mut p = MultiPoly::zero(3);
    for i in 0..=b.min(a) {
        let coeff = binom_u(b, i) * binom_u(a, i + c);
        if !coeff.is_zero() {
            p = &p + &(&mono3(a - i, b - i, 0, coeff) * &xy_z.pow(i));
        }
    }
    p
}

pub fn lemma101_check(a: u32, b: u32, c: u32) -> bool {
    d_poly(a, b, c) == d_tilde_poly(a, b, c)
}

/// `μ_{i,j}^{(a)}(t) = Σ_{i₁=0}^i C(i,i₁) C(a+j, a+i₁) t^{i₁}`.
pub fn mu_poly(a: u32, i: u32, j: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(1);
    for i1 in 0..=i {
        let coeff = binom_u(i, i1) * binom_u(a + j, a + i1);
        p = &p + &MultiPoly::monomial(MultiIndex::new(vec![i1]), int_rat(coeff));
    }
    p
}

/// `η_{i,j}^{(a,b)} = Σ_{i₁=0}^{b+i} C(b+i,i₁) C(b+j,i₁) i₁! (a+b+i+j−i₁)!`.
pub fn eta(a: u32, b: u32, i: u32, j: u32) -> BigInt {
    (0..=(b + i))
        .map(|i1| {
            binom_u(b + i, i1)
                * binom_u(b + j, i1)
                * factorial(u64::from(i1))
                * factorial(u64::from(a + b + i + j - i1))
        })
        .sum()
}
