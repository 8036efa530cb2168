//! The coefficient-field abstraction every algebraic structure in this crate
//! is generic over.
//!
//! Two instances are provided: [`ScalarK`](crate::scalar::ScalarK), exact
//! rational functions in `s` (with `q = s²`), and [`Rational`], exact
//! rationals used for specialising `s` to a number.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rationals; the specialisation target for `s`.
pub type Rational = BigRational;

pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    /// Rough size of the value, used to rank pivot candidates.
    fn cost(&self) -> usize;

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out *= other;
        out
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out += other;
        out
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out -= other;
        out
    }

    /// `self / other`; panics on a zero divisor.
    fn div_ref(&self, other: &Self) -> Self {
        let inv = other.inverse().expect("division by zero");
        self.mul_ref(&inv)
    }

    /// Integer power, negative exponents invert.
    fn powi(&self, e: i64) -> Self {
        if e < 0 {
            return self
                .inverse()
                .expect("negative power of zero")
                .powi(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                let b2 = base.clone();
                base *= &b2;
            }
        }
        acc
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn cost(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_powers() {
        let two = Rational::from_i64(2);
        assert_eq!(two.powi(10), Rational::from_i64(1024));
        assert_eq!(two.powi(-2), Rational::new(1.into(), 4.into()));
        assert_eq!(Rational::zero().inverse(), None);
    }
}
