use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::modular;
use super::poly;
use super::quadratic::{scalar_sqrt, QuadScalar, ScalarRoot};
use crate::Rational;

/// Outcome of taking the square root of a constant.
#[derive(Debug, Clone, PartialEq)]
pub enum Sqrt<K> {
    /// The root lives in the same field.
    Exact(K),
    /// The root needs the quadratic extension described by the returned scalar.
    Extension(QuadScalar),
    /// The root would need a tower of extensions, which is not supported.
    Unsupported,
}

/// Exact coefficient field.
///
/// Everything in this crate is generic over this trait; [`Rational`] and
/// [`QuadScalar`] are the two implementations. The `poly_*` hooks let an
/// implementation replace the naive dense algorithms with faster ones.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_rational(q: Rational) -> Self;

    /// `Some` when the value is a plain rational.
    fn to_rational(&self) -> Option<Rational>;

    /// Embedding into the quadratic scalars.
    fn to_quad(&self) -> QuadScalar;

    fn sqrt(&self) -> Sqrt<Self>;

    /// Sign and magnitude used for printing: `(negative, magnitude, needs_parens)`.
    fn display_parts(&self) -> (bool, String, bool);

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        poly::schoolbook_mul(a, b)
    }

    /// Monic gcd of two nonzero dense polynomials (low-to-high coefficients).
    fn poly_gcd(a: &[Self], b: &[Self]) -> Vec<Self> {
        poly::euclid_gcd(a, b)
    }
}

impl Field for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn to_quad(&self) -> QuadScalar {
        QuadScalar::rational(self.clone())
    }

    fn sqrt(&self) -> Sqrt<Self> {
        if self.is_zero() {
            return Sqrt::Exact(Rational::zero());
        }
        match scalar_sqrt(self) {
            ScalarRoot::Rational(r) => Sqrt::Exact(r),
            ScalarRoot::Extension { d, cofactor } => {
                Sqrt::Extension(QuadScalar::from_parts(Rational::zero(), cofactor, Some(d)))
            }
        }
    }

    fn display_parts(&self) -> (bool, String, bool) {
        (self.is_negative(), self.abs().to_string(), false)
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        modular::rational_mul(a, b)
    }

    fn poly_gcd(a: &[Self], b: &[Self]) -> Vec<Self> {
        modular::rational_gcd(a, b)
    }
}
