use std::fmt;

use super::field::Field;
use super::poly::{poly_gcd, UniPoly};
use crate::error::{Error, Result};

/// Reduced fraction `num / den` with a monic denominator.
///
/// Construction normalizes, so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<K> {
    num: UniPoly<K>,
    den: UniPoly<K>,
}

impl<K: Field> RatFunc<K> {
    pub fn new(num: UniPoly<K>, den: UniPoly<K>) -> Result<Self> {
        let Some(lc) = den.lc().cloned() else {
            return Err(Error::domain("rational function with zero denominator"));
        };
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: UniPoly::one(),
            });
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let inv = K::one() / den.lc().cloned().unwrap_or(lc);
        Ok(RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: UniPoly<K>) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn num(&self) -> &UniPoly<K> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Constant functions, zero included.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// `max(deg num, deg den)`, the degree of the induced map of the line.
    pub fn height(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let n = self.num.to_string_in(var);
        if self.den.is_one() {
            return n;
        }
        let wrap = |s: String, p: &UniPoly<K>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(n, &self.num),
            wrap(self.den.to_string_in(var), &self.den)
        )
    }
}

impl<K: Field> fmt::Debug for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.to_string_in("y"))
    }
}

impl<K: Field> fmt::Display for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("y"))
    }
}
