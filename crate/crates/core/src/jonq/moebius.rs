use std::fmt;

use crate::arith::Field;
use crate::error::{Error, Result};

/// Projective 2x2 scalar matrix acting on the base line by `y -> (a y + b)/(c y + d)`.
///
/// Stored normalized: the first nonzero entry in the order `a, b, c, d` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Moebius<K> {
    m: [K; 4],
}

fn normalize<K: Field>(mut m: [K; 4]) -> [K; 4] {
    let lead = m
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .expect("nonsingular");
    if !lead.is_one() {
        let inv = K::one() / lead;
        for c in m.iter_mut() {
            *c = c.clone() * &inv;
        }
    }
    m
}

fn mat_mul<K: Field>(p: &[K; 4], q: &[K; 4]) -> [K; 4] {
    let [a, b, c, d] = p;
    let [e, f, g, h] = q;
    [
        a.clone() * e + &(b.clone() * g),
        a.clone() * f + &(b.clone() * h),
        c.clone() * e + &(d.clone() * g),
        c.clone() * f + &(d.clone() * h),
    ]
}

impl<K: Field> Moebius<K> {
    pub fn new(a: K, b: K, c: K, d: K) -> Result<Self> {
        if (a.clone() * &d - b.clone() * &c).is_zero() {
            return Err(Error::domain(
                "singular Moebius transformation (ad - bc = 0)",
            ));
        }
        Ok(Moebius {
            m: normalize([a, b, c, d]),
        })
    }

    pub fn identity() -> Self {
        Moebius {
            m: [K::one(), K::zero(), K::zero(), K::one()],
        }
    }

    /// `y -> y + t`
    pub fn translation(t: K) -> Self {
        Moebius {
            m: [K::one(), t, K::zero(), K::one()],
        }
    }

    /// `y -> s y`, `s` nonzero.
    pub fn scaling(s: K) -> Result<Self> {
        Self::new(s, K::zero(), K::zero(), K::one())
    }

    pub fn entries(&self) -> &[K; 4] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        let [a, b, c, d] = &self.m;
        a.is_one() && b.is_zero() && c.is_zero() && d.is_one()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        Moebius {
            m: normalize(mat_mul(&self.m, &other.m)),
        }
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.m.clone();
        Moebius {
            m: normalize([d, -b, -c, a]),
        }
    }

    /// Image of a point of the affine line; `None` at the pole.
    pub fn apply(&self, y: &K) -> Option<K> {
        let [a, b, c, d] = &self.m;
        let den = c.clone() * y + d;
        if den.is_zero() {
            return None;
        }
        Some((a.clone() * y + b) / den)
    }

    /// Least `l <= n_max` with `self^l` the identity.
    pub fn order(&self, n_max: u32) -> Option<u32> {
        let mut p = self.m.clone();
        for l in 1..=n_max {
            let [a, b, c, d] = &p;
            if b.is_zero() && c.is_zero() && a == d {
                return Some(l);
            }
            p = mat_mul(&p, &self.m);
        }
        None
    }

    pub fn map_field<L: Field>(&self, f: impl Fn(&K) -> L) -> Moebius<L> {
        let [a, b, c, d] = &self.m;
        Moebius {
            m: normalize([f(a), f(b), f(c), f(d)]),
        }
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let [a, b, c, d] = &self.m;
        let num = crate::arith::UniPoly::linear(a.clone(), b.clone());
        let den = crate::arith::UniPoly::linear(c.clone(), d.clone());
        if den.is_one() {
            num.to_string_in(var)
        } else {
            format!("({})/({})", num.to_string_in(var), den.to_string_in(var))
        }
    }
}

impl<K: Field> fmt::Debug for Moebius<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Moebius({})", self.to_string_in("y"))
    }
}
