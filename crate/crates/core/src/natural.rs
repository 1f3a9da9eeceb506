//! The scalar used for multiplicities, exponents, twists and levels.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{Error, Result};

/// Non-negative exact integers.
///
/// Implemented for every unsigned primitive and for `BigUint`. Arithmetic
/// that can overflow a fixed-width type goes through [`Natural::add_checked`]
/// and [`Natural::mul_checked`], which report [`Error::Overflow`].
pub trait Natural:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Integer
    + Unsigned
    + CheckedAdd
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn add_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn mul_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    fn from_u64_exact(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow)
    }
}

impl<T> Natural for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Integer
        + Unsigned
        + CheckedAdd
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// `ceil(a / b)` for `b >= 1`.
pub fn ceil_div<M: Natural>(a: &M, b: &M) -> M {
    debug_assert!(!b.is_zero());
    a.div_ceil(b)
}
