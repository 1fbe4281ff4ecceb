use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar for polynomial coefficients.
///
/// Arithmetic goes through the checked operations, so a fixed-width type
/// panics on overflow instead of wrapping.
pub trait Coefficient:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn add_exact(&self, other: &Self) -> Self {
        self.checked_add(other).expect("coefficient overflow")
    }

    fn sub_exact(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("coefficient overflow")
    }

    fn mul_exact(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("coefficient overflow")
    }

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the coefficient type")
    }
}

impl<T> Coefficient for T where
    T: Clone
        + Eq
        + Ord
        + Hash
        + Debug
        + Display
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
