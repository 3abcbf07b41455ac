//! Exact arithmetic in the Weyl algebra `A_n` of polynomial differential
//! operators.
//!
//! Elements are finite linear combinations of normal-ordered monomials
//! `x^α ∂^β` with rational coefficients. On top of the composition law the
//! crate provides the multi-weight and weight gradings, the adjoint
//! anti-involution `x^α ∂^β ↦ x^β ∂^α`, the trace functional, the twisted
//! symmetric associative form `(X, Y) = T(X ∘ Y)` and the positive-definite
//! form `⟨X, Y⟩ = √2^{l(X)} (X, Ȳ)` valued in `Q[√2]`.
//!
//! Everything is exact. Scalars are [`BigRat`] and [`QSqrt2`], polynomials
//! are sparse [`MultiPoly`] over `BigRat`, and matrices are generic over the
//! [`Ring`] trait with fraction-free determinants.

pub mod combinatorics;
pub mod error;
pub mod forms;
pub mod index;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod sample;
pub mod scalar;
pub mod weyl;

pub use error::{Error, Result};
pub use index::MultiIndex;
pub use linalg::{ExactMatrix, OrderedRing, Ring};
pub use poly::MultiPoly;
pub use scalar::{sqrt2_power, BigRat, QSqrt2};
pub use weyl::{WeylElement, WeylMonomial};
