//! Scalars of a quadratic field `Q(sqrt(d))`.
//!
//! A value carries its own extension tag `d`. Plain rationals have no tag and
//! combine with any tagged value; combining two different tags is a bug in the
//! caller and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Sqrt};
use crate::error::{Error, Result};
use crate::Rational;

/// Square root of a nonzero rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarRoot {
    Rational(Rational),
    /// `sqrt(c) = cofactor * sqrt(d)` with `d` squarefree, `d != 0, 1`.
    Extension {
        d: BigInt,
        cofactor: Rational,
    },
}

/// Squarefree decomposition `n = s^2 * r` of a positive integer, `r` returned
/// first. Square factors are removed by trial division; a cofactor that
/// survives the search is tested for being a perfect square.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1u64 << 20);
    while p <= limit && (&p * &p * &p) <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        square *= root;
    } else {
        free *= rest;
    }
    (free, square)
}

/// Exact square root of a nonzero rational, or the extension that contains it.
pub fn scalar_sqrt(c: &Rational) -> ScalarRoot {
    assert!(!c.is_zero(), "scalar_sqrt of zero");
    let sign = BigInt::from(if c.is_negative() { -1 } else { 1 });
    // c = n/m = n*m / m^2
    let nm = (c.numer() * c.denom()).abs();
    let (free, square) = split_square(&nm);
    let cofactor = Rational::new(square, c.denom().clone());
    let d = free * sign;
    if d.is_one() {
        ScalarRoot::Rational(cofactor)
    } else {
        ScalarRoot::Extension { d, cofactor }
    }
}

fn is_integer_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// The value `a + b*sqrt(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    d: Option<BigInt>,
}

impl QuadScalar {
    pub fn rational(a: Rational) -> Self {
        QuadScalar {
            a,
            b: Rational::zero(),
            d: None,
        }
    }

    /// Checked constructor: `d` must be a squarefree integer other than 0 and 1.
    pub fn new(a: Rational, b: Rational, d: Option<BigInt>) -> Result<Self> {
        match &d {
            None if !b.is_zero() => {
                return Err(Error::domain("irrational part given without an extension"))
            }
            Some(d) => {
                if d.is_zero() || d.is_one() || is_integer_square(d) {
                    return Err(Error::domain(format!(
                        "{d} does not define a quadratic field"
                    )));
                }
                let (free, _) = split_square(&d.abs());
                if free != d.abs() {
                    return Err(Error::domain(format!("{d} is not squarefree")));
                }
            }
            None => {}
        }
        Ok(Self::from_parts(a, b, d))
    }

    pub(crate) fn from_parts(a: Rational, b: Rational, d: Option<BigInt>) -> Self {
        if b.is_zero() {
            QuadScalar { a, b, d: None }
        } else {
            QuadScalar { a, b, d }
        }
    }

    pub fn sqrt_of(d: i64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), Some(BigInt::from(d)))
    }

    pub fn re(&self) -> &Rational {
        &self.a
    }

    pub fn im(&self) -> &Rational {
        &self.b
    }

    pub fn extension(&self) -> Option<&BigInt> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_none()
    }

    /// `(a + b√d)(a - b√d) = a² - b²d`
    pub fn norm(&self) -> Rational {
        match &self.d {
            None => &self.a * &self.a,
            Some(d) => &self.a * &self.a - &self.b * &self.b * Rational::from_integer(d.clone()),
        }
    }

    pub fn conj(&self) -> Self {
        QuadScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    fn join(&self, other: &Self) -> Option<BigInt> {
        match (&self.d, &other.d) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d.clone()),
            (Some(d), Some(e)) => {
                assert!(d == e, "mixed quadratic extensions sqrt({d}) and sqrt({e})");
                Some(d.clone())
            }
        }
    }

    fn add_ref(&self, o: &Self) -> Self {
        let d = self.join(o);
        Self::from_parts(&self.a + &o.a, &self.b + &o.b, d)
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let d = self.join(o);
        Self::from_parts(&self.a - &o.a, &self.b - &o.b, d)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let d = self.join(o);
        let bb = &self.b * &o.b;
        let a = match &d {
            Some(d) if !bb.is_zero() => &self.a * &o.a + bb * Rational::from_integer(d.clone()),
            _ => &self.a * &o.a,
        };
        let b = &self.a * &o.b + &self.b * &o.a;
        Self::from_parts(a, b, d)
    }

    fn inv_ref(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero");
        let c = self.conj();
        Self::from_parts(c.a / &n, c.b / &n, c.d)
    }

    fn div_ref(&self, o: &Self) -> Self {
        self.mul_ref(&o.inv_ref())
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = &self.d else {
            return write!(f, "{}", self.a);
        };
        let root = format!("sqrt({d})");
        let irr = if self.b.is_one() {
            root
        } else if self.b == -Rational::one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{irr}")
        } else if irr.starts_with('-') {
            write!(f, "{}{irr}", self.a)
        } else {
            write!(f, "{}+{irr}", self.a)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, o: QuadScalar) -> QuadScalar {
                self.$imp(&o)
            }
        }
        impl<'a> $tr<&'a QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $m(self, o: &'a QuadScalar) -> QuadScalar {
                self.$imp(o)
            }
        }
        impl<'a, 'b> $tr<&'b QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $m(self, o: &'b QuadScalar) -> QuadScalar {
                self.$imp(o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl<'a> AddAssign<&'a QuadScalar> for QuadScalar {
    fn add_assign(&mut self, o: &'a QuadScalar) {
        *self = self.add_ref(o);
    }
}

impl<'a> SubAssign<&'a QuadScalar> for QuadScalar {
    fn sub_assign(&mut self, o: &'a QuadScalar) {
        *self = self.sub_ref(o);
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        QuadScalar::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        QuadScalar::rational(Rational::one())
    }
}

impl From<Rational> for QuadScalar {
    fn from(q: Rational) -> Self {
        QuadScalar::rational(q)
    }
}

impl Field for QuadScalar {
    fn from_rational(q: Rational) -> Self {
        QuadScalar::rational(q)
    }

    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    fn to_quad(&self) -> QuadScalar {
        self.clone()
    }

    fn sqrt(&self) -> Sqrt<Self> {
        if self.is_zero() {
            return Sqrt::Exact(Self::zero());
        }
        let Some(d) = &self.d else {
            return match self.a.sqrt() {
                Sqrt::Exact(r) => Sqrt::Exact(QuadScalar::rational(r)),
                Sqrt::Extension(q) => Sqrt::Extension(q),
                Sqrt::Unsupported => Sqrt::Unsupported,
            };
        };
        // (x + y√d)² = a + b√d  ⇔  x² + d y² = a, 2xy = b.
        // x² solves t² - a t + b² d / 4 = 0, so t = (a ± sqrt(norm)) / 2.
        let n = self.norm();
        if n.is_negative() {
            return Sqrt::Unsupported;
        }
        let ScalarRoot::Rational(s) = scalar_sqrt(&n) else {
            return Sqrt::Unsupported;
        };
        let two = Rational::from_integer(BigInt::from(2));
        for t in [(&self.a + &s) / &two, (&self.a - &s) / &two] {
            if t.is_zero() {
                // x = 0, then y² = a/d
                let y2 = &self.a / Rational::from_integer(d.clone());
                if let ScalarRoot::Rational(y) = scalar_sqrt(&y2) {
                    return Sqrt::Exact(Self::from_parts(Rational::zero(), y, Some(d.clone())));
                }
                continue;
            }
            if t.is_negative() {
                continue;
            }
            if let ScalarRoot::Rational(x) = scalar_sqrt(&t) {
                let y = &self.b / (&two * &x);
                return Sqrt::Exact(Self::from_parts(x, y, Some(d.clone())));
            }
        }
        Sqrt::Unsupported
    }

    fn display_parts(&self) -> (bool, String, bool) {
        if self.is_rational() {
            return self.a.display_parts();
        }
        if self.a.is_zero() {
            let neg = self.b.is_negative();
            let mag = Self::from_parts(Rational::zero(), self.b.abs(), self.d.clone());
            return (neg, mag.to_string(), false);
        }
        (false, self.to_string(), true)
    }

    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        match (rational_slice(a), rational_slice(b)) {
            (Some(a), Some(b)) => Rational::poly_mul(&a, &b)
                .into_iter()
                .map(QuadScalar::rational)
                .collect(),
            _ => super::poly::schoolbook_mul(a, b),
        }
    }

    fn poly_gcd(a: &[Self], b: &[Self]) -> Vec<Self> {
        match (rational_slice(a), rational_slice(b)) {
            (Some(a), Some(b)) => Rational::poly_gcd(&a, &b)
                .into_iter()
                .map(QuadScalar::rational)
                .collect(),
            _ => super::poly::euclid_gcd(a, b),
        }
    }
}

fn rational_slice(v: &[QuadScalar]) -> Option<Vec<Rational>> {
    v.iter().map(|c| c.to_rational()).collect()
}

/// Integer-normalized squarefree part of `n` (sign kept).
pub fn squarefree_part(n: &BigInt) -> BigInt {
    if n.is_zero() {
        return BigInt::zero();
    }
    let (free, _) = split_square(&n.abs());
    if n.is_negative() {
        -free
    } else {
        free
    }
}
