//! Exact integer scalars used by the closed-form evaluators.
//!
//! Every closed form is generic over [`RadoInt`], so the same code runs on
//! machine words (with overflow reported as [`RadoError::Overflow`]) or on
//! arbitrary-precision [`num_bigint::BigUint`].

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive, Unsigned};

use crate::error::{RadoError, Result};

pub trait RadoInt:
    Integer
    + Unsigned
    + Clone
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
    fn lit(v: u64) -> Self {
        Self::from_u64(v).expect("every RadoInt holds small literals")
    }
}

impl<T> RadoInt for T where
    T: Integer
        + Unsigned
        + Clone
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Display
        + Debug
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn add<T: RadoInt>(x: &T, y: &T, what: &str) -> Result<T> {
    x.checked_add(y)
        .ok_or_else(|| RadoError::Overflow(what.to_string()))
}

pub(crate) fn sub<T: RadoInt>(x: &T, y: &T, what: &str) -> Result<T> {
    x.checked_sub(y)
        .ok_or_else(|| RadoError::Overflow(what.to_string()))
}

pub(crate) fn mul<T: RadoInt>(x: &T, y: &T, what: &str) -> Result<T> {
    x.checked_mul(y)
        .ok_or_else(|| RadoError::Overflow(what.to_string()))
}

/// `v * lit`, checked.
pub(crate) fn scale<T: RadoInt>(v: &T, lit: u64, what: &str) -> Result<T> {
    mul(v, &T::lit(lit), what)
}

/// `x ≡ y (mod p)` for unsigned values.
pub(crate) fn congruent<T: RadoInt>(x: &T, y: &T, p: u64) -> bool {
    let p = T::lit(p);
    x.mod_floor(&p) == y.mod_floor(&p)
}
