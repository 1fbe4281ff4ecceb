//! Finite Coxeter groups: types, root data, canonical elements and full
//! enumeration.
//!
//! Weyl group elements are stored as the signed permutation they induce on
//! the positive roots, which makes multiplication exact and equality
//! structural. `I2(m)` has no integral root system for general `m`, so its
//! elements are stored as alternating normal-form words instead.

mod cartan;
mod element;
mod enumerate;
mod system;

use std::hash::Hash;

pub use cartan::{CartanType, Family};
pub use element::Element;
pub use enumerate::{enumeration_cap, EnumeratedGroup, DEFAULT_ENUM_CAP};
pub use system::{ComponentDecomposition, CoxeterSystem};

/// Minimal multiplication interface shared by a [`CoxeterSystem`] acting on
/// [`Element`]s and an [`EnumeratedGroup`] acting on element ids.
///
/// Generators are 1-based.
pub trait GroupView: Sync {
    type Elem: Clone + Eq + Hash + Send + Sync;

    fn rank(&self) -> usize;
    fn length(&self, w: &Self::Elem) -> usize;
    fn is_right_descent(&self, w: &Self::Elem, i: usize) -> bool;
    /// `w s_i`
    fn right_mul(&self, w: &Self::Elem, i: usize) -> Self::Elem;
    fn is_left_descent(&self, w: &Self::Elem, i: usize) -> bool;
    /// `s_i w`
    fn left_mul(&self, i: usize, w: &Self::Elem) -> Self::Elem;
}

impl GroupView for CoxeterSystem {
    type Elem = Element;

    fn rank(&self) -> usize {
        CoxeterSystem::rank(self)
    }

    fn length(&self, w: &Element) -> usize {
        w.length()
    }

    fn is_right_descent(&self, w: &Element, i: usize) -> bool {
        CoxeterSystem::is_right_descent(self, w, i)
    }

    fn right_mul(&self, w: &Element, i: usize) -> Element {
        self.right_mul_unchecked(w, i)
    }

    fn is_left_descent(&self, w: &Element, i: usize) -> bool {
        CoxeterSystem::is_left_descent(self, w, i)
    }

    fn left_mul(&self, i: usize, w: &Element) -> Element {
        self.left_mul_unchecked(i, w)
    }
}
