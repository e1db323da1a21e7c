//! Exact computer algebra for Ore extensions S = K[y][x; sigma, delta]
//! over the rationals.
//!
//! The crate provides:
//! - canonical skew-polynomial arithmetic driven by the commutation rule
//!   x*r = sigma(r)*x + delta(r) ([`ore::OrePoly`]),
//! - pseudo-degree bookkeeping and randomized axiom validation
//!   ([`axioms`]),
//! - centralizer slices, the free-module basis of a centralizer over K[a],
//!   and condition D(l) checks ([`centralizer`]),
//! - annihilating polynomials f with f(P, Q) = 0 for commuting pairs
//!   ([`annihilator`]),
//! - an expression parser and config loader used by the `orecas` binary
//!   ([`parse`], [`config`]).
//!
//! Everything is exact: scalars are arbitrary-precision rationals and the
//! linear algebra is fraction-free.

pub mod algebra;
pub mod annihilator;
pub mod axioms;
pub mod base;
pub mod centralizer;
pub mod config;
pub mod coords;
pub mod degree;
pub mod error;
pub mod linalg;
pub mod ore;
pub mod parse;
mod render;
pub mod scalar;

pub use algebra::{shared, Algebra, OreAlgebraSpec};
pub use base::BasePoly;
pub use degree::Degree;
pub use error::{Error, Result};
pub use ore::OrePoly;
pub use scalar::Scalar;
