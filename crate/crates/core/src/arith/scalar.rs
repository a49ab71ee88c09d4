use std::fmt::{Debug, Display};

use super::Rational;
use crate::error::Result;

/// A commutative ring containing the rationals, used as the coefficient
/// and value type of polynomials and characters.
///
/// `Ring` identifies which concrete ring an element lives in (the rationals
/// have a single ring, cyclotomic fields are indexed by their order), so that
/// constants can be created without a sample element and mixed-ring
/// arithmetic is reported instead of silently producing garbage.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync {
    type Ring: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn ring(&self) -> Self::Ring;
    fn from_rational_in(ring: &Self::Ring, r: Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn try_add(&self, rhs: &Self) -> Result<Self>;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn negate(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse; fails on zero.
    fn try_inverse(&self) -> Result<Self>;
    /// The value as a rational, when it lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;

    fn zero_in(ring: &Self::Ring) -> Self {
        Self::from_rational_in(ring, Rational::zero())
    }

    fn one_in(ring: &Self::Ring) -> Self {
        Self::from_rational_in(ring, Rational::one())
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.negate())
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(&rhs.try_inverse()?)
    }
}

impl Scalar for Rational {
    type Ring = ();

    fn ring(&self) {}

    fn from_rational_in(_: &(), r: Rational) -> Self {
        r
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn try_add(&self, rhs: &Self) -> Result<Self> {
        Ok(self + rhs)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }

    fn negate(&self) -> Self {
        -self
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }

    fn try_inverse(&self) -> Result<Self> {
        self.recip()
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}
