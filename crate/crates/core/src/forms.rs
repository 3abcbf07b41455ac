//! Trace, the associative form `(X, Y) = T(X ∘ Y)` and the positive-definite
//! form `⟨X, Y⟩ = √2^{l(X)} (X, Ȳ)`, plus the Gram-matrix families used to
//! certify positivity and non-degeneracy on finite spans.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{binom, d_tilde_poly, eta, mu_poly, multi_binom, multi_factorial};
use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::linalg::ExactMatrix;
use crate::poly::MultiPoly;
use crate::scalar::{int_rat, sqrt2_power, BigRat, QSqrt2};
use crate::weyl::{WeylElement, WeylMonomial};

/// `T(x^α ∂^β) = α!` if `α = β`, else 0, extended linearly.
pub fn trace(x: &WeylElement) -> BigRat {
    x.terms().filter(|(m, _)| m.is_diagonal()).map(|(m, c)| c * int_rat(multi_factorial(m.alpha()))).sum()
}

/// `(X, Y) = T(X ∘ Y)`.
pub fn frob(x: &WeylElement, y: &WeylElement) -> Result<BigRat> {
    Ok(trace(&x.compose(y)?))
}

/// Closed form of `(x^α ∂^β, x^α' ∂^β')`: zero unless `α+α' = β+β' = θ`,
/// then `θ! Σ_γ C(θ−γ, α) C(β, γ) / C(θ, α)`.
pub fn frob_pair_closed(
    alpha: &MultiIndex,
    beta: &MultiIndex,
    alpha2: &MultiIndex,
    beta2: &MultiIndex,
) -> Result<BigRat> {
    let n = alpha.arity();
    for m in [beta, alpha2, beta2] {
        if m.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: m.arity() });
        }
    }
    let theta = alpha.add(alpha2);
    if beta.add(beta2) != theta {
        return Ok(BigRat::zero());
    }
    let sum: BigInt = beta
        .box_below()
        .map(|g| {
            (0..n)
                .map(|i| binom(i64::from(theta.get(i)) - i64::from(g.get(i)), i64::from(alpha.get(i))))
                .product::<BigInt>()
                * multi_binom(beta, &g)
        })
        .sum();
    // θ ≥ α, so C(θ, α) > 0
    Ok(int_rat(multi_factorial(&theta) * sum) / int_rat(multi_binom(&theta, alpha)))
}

/// `⟨X, Y⟩ = Σ_ω √2^{l(ω)} (X_ω, Ȳ_ω)`.
///
/// Distinct multi-weight components are orthogonal, so the sum over common
/// components agrees with `√2^{l(X)} (X, Ȳ)` for homogeneous `X`.
pub fn euclid(x: &WeylElement, y: &WeylElement) -> Result<QSqrt2> {
    if x.arity() != y.arity() {
        return Err(Error::ArityMismatch { expected: x.arity(), found: y.arity() });
    }
    let yc = y.multiweight_components();
    let mut acc = QSqrt2::zero();
    for (omega, xw) in x.multiweight_components() {
        let Some(yw) = yc.get(&omega) else { continue };
        let l: i64 = omega.iter().sum();
        let f = frob(&xw, &yw.bar())?;
        acc += &sqrt2_power(l).scale(&f);
    }
    Ok(acc)
}

/// Squared length `|X|² = ⟨X, X⟩`.
pub fn norm2(x: &WeylElement) -> QSqrt2 {
    euclid(x, x).expect("same arity")
}

/// `⟨X, Y⟩ = 0`.
pub fn is_orthogonal(x: &WeylElement, y: &WeylElement) -> Result<bool> {
    Ok(euclid(x, y)?.is_zero())
}

fn monomial_element(m: &WeylMonomial) -> WeylElement {
    WeylElement::from_monomial(m.clone(), BigRat::from_integer(1.into())).expect("positive arity")
}

/// Gram matrix `G[i][j] = ⟨b_i, b_j⟩` of distinct monomials.
pub fn gram_euclid(basis: &[WeylMonomial]) -> Result<ExactMatrix<QSqrt2>> {
    let Some(first) = basis.first() else { return Err(Error::BadShape) };
    let n = first.arity();
    let mut seen = BTreeSet::new();
    for m in basis {
        if m.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: m.arity() });
        }
        if !seen.insert(m.clone()) {
            return Err(Error::DuplicateMonomial(m.to_string()));
        }
    }
    let elems: Vec<_> = basis.iter().map(monomial_element).collect();
    let mut rows = Vec::with_capacity(elems.len());
    for a in &elems {
        rows.push(elems.iter().map(|b| euclid(a, b)).collect::<Result<Vec<_>>>()?);
    }
    ExactMatrix::from_rows(rows)
}

/// Gram matrix of arbitrary elements under `⟨·,·⟩`.
pub fn gram_euclid_elements(elems: &[WeylElement]) -> Result<ExactMatrix<QSqrt2>> {
    let mut rows = Vec::with_capacity(elems.len());
    for a in elems {
        rows.push(elems.iter().map(|b| euclid(a, b)).collect::<Result<Vec<_>>>()?);
    }
    ExactMatrix::from_rows(rows)
}

/// Matrix `P[i][j] = (left_i, right_j)` of the associative form.
pub fn frob_pairing(left: &[WeylElement], right: &[WeylElement]) -> Result<ExactMatrix<BigRat>> {
    let mut rows = Vec::with_capacity(left.len());
    for a in left {
        rows.push(right.iter().map(|b| frob(a, b)).collect::<Result<Vec<_>>>()?);
    }
    ExactMatrix::from_rows(rows)
}

/// `{x^{a+i} ∂^i : 0 ≤ i ≤ k}` in `A_1`.
pub fn shifted_euler_basis(a: u32, k: u32) -> Vec<WeylMonomial> {
    (0..=k).map(|i| WeylMonomial::from_exps(&[a + i], &[i])).collect()
}

/// `N^{(a,k)}` with entries `η^{(a,0)}_{i,j}`.
pub fn build_n(a: u32, k: u32) -> ExactMatrix<BigInt> {
    let k = k as usize;
    ExactMatrix::from_fn(k + 1, k + 1, |i, j| eta(a, 0, i as u32, j as u32)).expect("non-empty")
}

/// `M^{(a)}(t)` of size `(k+1)×(k+1)` with entries `μ^{(a)}_{i,j}(t)`.
pub fn build_m(a: u32, k: u32) -> ExactMatrix<MultiPoly> {
    let k = k as usize;
    ExactMatrix::from_fn(k + 1, k + 1, |i, j| mu_poly(a, i as u32, j as u32)).expect("non-empty")
}

/// `M̃^{(a,k)}(x,y,z)` with entries `d̃^{(a)}_{a+j,i}(x,y,z)`.
pub fn build_mtilde(a: u32, k: u32) -> ExactMatrix<MultiPoly> {
    let k = k as usize;
    ExactMatrix::from_fn(k + 1, k + 1, |i, j| d_tilde_poly(a + j as u32, i as u32, a)).expect("non-empty")
}
