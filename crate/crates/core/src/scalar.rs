//! Coefficient traits shared by the polynomial and matrix types.
//!
//! Everything in this crate is exact, so the traits only ask for ring
//! structure. Integer-only operations (exact division, sign normalization)
//! add the [`IntegerRing`] bound on top.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// Integer-like rings: Euclidean division and a sign.
pub trait IntegerRing: Ring + Integer + Signed {}

impl<T> IntegerRing for T where T: Ring + Integer + Signed {}

/// `a` divided by `b` when the remainder is zero.
pub(crate) fn exact_quotient<R: IntegerRing>(a: &R, b: &R) -> Option<R> {
    let (quo, rem) = a.div_rem(b);
    rem.is_zero().then_some(quo)
}
