//! Spherical elements of finite Coxeter groups, key polynomials and their
//! split-symmetric Schur expansions.
//!
//! The crate is organized bottom-up: [`coxeter`] provides exact group
//! arithmetic, [`words`] reduced words and Bruhat order, [`spherical`] the
//! witness search, [`typea`] permutation combinatorics, [`poly`] polynomial
//! algebra, [`splitrule`] the tableau rule for split expansions and
//! [`harness`] the reproduction commands behind the `coxsph` binary.

pub mod coxeter;
pub mod error;
pub mod harness;
pub mod poly;
pub mod spherical;
pub mod splitrule;
pub mod typea;
pub mod words;

pub use coxeter::{CartanType, CoxeterSystem, Element, EnumeratedGroup, GroupView};
pub use error::{Error, Result};
pub use words::Word;

/// Polynomials with arbitrary-precision integer coefficients.
pub type Poly = poly::Polynomial<num_bigint::BigInt>;
/// Polynomials with `i64` coefficients; arithmetic panics on overflow.
pub type Poly64 = poly::Polynomial<i64>;
/// D-Schur expansion with arbitrary-precision integer coefficients.
pub type SplitExpansion = poly::Expansion<num_bigint::BigInt>;
