//! Exact integer scalars.
//!
//! Every quantity in this crate is a lattice coordinate, so the arithmetic is
//! exact and generic over checked primitive signed integers. Overflow is never
//! allowed to wrap: it surfaces as [`Error::Overflow`](crate::Error::Overflow).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, PrimInt, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// A signed primitive integer usable for exact lattice arithmetic.
pub trait Exact:
    PrimInt + Signed + FromPrimitive + ToPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
    /// Lossless conversion from an index or count.
    fn from_index(n: usize) -> Result<Self> {
        Self::from_usize(n).ok_or(Error::Overflow)
    }

    /// Conversion from a small signed constant.
    fn lit(n: i64) -> Self {
        Self::from_i64(n).expect("literal fits every supported scalar")
    }

    fn is_even(&self) -> bool {
        (*self % Self::lit(2)).is_zero()
    }
}

impl Exact for i32 {}
impl Exact for i64 {}
impl Exact for i128 {}

/// Overflow-poisoning integer. Arithmetic on a poisoned value stays poisoned,
/// so long closed-form expressions can be written with plain operators and
/// checked once at the end with [`Checked::get`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checked<Z>(Option<Z>);

impl<Z: Exact> Checked<Z> {
    pub fn new(value: Z) -> Self {
        Checked(Some(value))
    }

    pub fn lit(n: i64) -> Self {
        Checked(Z::from_i64(n))
    }

    pub fn index(n: usize) -> Self {
        Checked(Z::from_usize(n))
    }

    pub fn from_bool(flag: bool) -> Self {
        Self::lit(flag as i64)
    }

    /// `(-1)^exponent` for a possibly negative exponent.
    pub fn sign_pow(exponent: i64) -> Self {
        if exponent.rem_euclid(2) == 0 {
            Self::lit(1)
        } else {
            Self::lit(-1)
        }
    }

    pub fn get(self) -> Result<Z> {
        self.0.ok_or(Error::Overflow)
    }
}

impl<Z: Exact> Add for Checked<Z> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Checked(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_add(&b)))
    }
}

impl<Z: Exact> Sub for Checked<Z> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Checked(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_sub(&b)))
    }
}

impl<Z: Exact> Mul for Checked<Z> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Checked(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_mul(&b)))
    }
}

impl<Z: Exact> Neg for Checked<Z> {
    type Output = Self;
    fn neg(self) -> Self {
        Checked(self.0.and_then(|a| Z::zero().checked_sub(&a)))
    }
}

impl<Z: Exact> Mul<Checked<Z>> for i64 {
    type Output = Checked<Z>;
    fn mul(self, rhs: Checked<Z>) -> Checked<Z> {
        Checked::lit(self) * rhs
    }
}

impl<Z: Exact> std::iter::Sum for Checked<Z> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Checked::lit(0), |acc, x| acc + x)
    }
}

pub(crate) fn checked_add<Z: Exact>(a: Z, b: Z) -> Result<Z> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul<Z: Exact>(a: Z, b: Z) -> Result<Z> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}
