//! Sparse polynomials with exact coefficients, Demazure operators, key and
//! Schur polynomials, and expansions in the split-symmetric Schur bases.

mod coefficient;
mod key;
pub mod oracle;
mod polynomial;
mod schur;
mod split;

pub use coefficient::Coefficient;
pub use key::{demazure_pi, key_expand, key_polynomial, key_via_kohnert};
pub use polynomial::{Exponents, Polynomial};
pub use schur::{schur, SchurTable};
pub use split::{
    d_schur, is_d_multiplicity_free, is_split_symmetric, split_expand, staircase_test, Expansion,
    SchurTuple, SplitSet,
};
