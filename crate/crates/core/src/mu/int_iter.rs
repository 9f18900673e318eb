//! Iteration of rational maps with integer-primitive representatives.
//!
//! Equivalent to [`JonquieresMap::compose`] followed by
//! [`plane_degree`](crate::jonq::plane_degree), but avoids rational
//! coefficient arithmetic, which dominates the cost of long iterations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::modular::{int_exact_div, int_mul, int_poly_gcd, scale_to_int};
use crate::jonq::JonquieresMap;
use crate::Rational;

type IntPoly = Vec<BigInt>;

fn trim(v: &mut IntPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn add(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

fn linear(a: &BigInt, b: &BigInt) -> IntPoly {
    let mut v = vec![b.clone(), a.clone()];
    trim(&mut v);
    v
}

/// `p((a y + b)/(c y + d)) (c y + d)^n`
fn substitute(p: &[BigInt], h: &[BigInt; 4], n: usize) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let num = linear(&h[0], &h[1]);
    let den = linear(&h[2], &h[3]);
    let mut num_pows = vec![vec![BigInt::one()]];
    let mut den_pows = vec![vec![BigInt::one()]];
    for i in 1..=n {
        num_pows.push(int_mul(&num_pows[i - 1], &num));
        den_pows.push(int_mul(&den_pows[i - 1], &den));
    }
    let mut acc = Vec::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term: IntPoly = int_mul(&num_pows[i], &den_pows[n - i])
            .into_iter()
            .map(|x| x * c)
            .collect();
        acc = add(&acc, &term);
    }
    acc
}

#[derive(Clone)]
pub(crate) struct IntMap {
    m: [IntPoly; 4],
    h: [BigInt; 4],
}

impl IntMap {
    pub(crate) fn from_rational(f: &JonquieresMap<Rational>) -> Self {
        let entries: Vec<Rational> = f
            .fiber()
            .entries()
            .iter()
            .flat_map(|e| e.coeffs().iter().cloned())
            .collect();
        let (_, den) = scale_to_int(&entries);
        let den = Rational::from_integer(den);
        let m = f.fiber().entries().map(|e| {
            let scaled: Vec<Rational> = e.coeffs().iter().map(|c| c * &den).collect();
            scaled
                .into_iter()
                .map(|c| c.to_integer())
                .collect::<IntPoly>()
        });
        let (h, _) = scale_to_int(f.base().entries());
        let h: [BigInt; 4] = h.try_into().expect("four entries");
        let mut out = IntMap { m, h };
        out.normalize();
        out
    }

    fn base_is_identity(&self) -> bool {
        self.h[1].is_zero() && self.h[2].is_zero() && self.h[0] == self.h[3]
    }

    fn normalize(&mut self) {
        let mut g: Option<IntPoly> = None;
        for e in self.m.iter().filter(|e| !e.is_empty()) {
            g = Some(match g {
                None => e.clone(),
                Some(g) if g.len() == 1 => g,
                Some(g) => int_poly_gcd(&g, e),
            });
        }
        let g = g.expect("nonsingular");
        if g.len() > 1 {
            for e in self.m.iter_mut() {
                *e = int_exact_div(e, &g).expect("gcd divides");
            }
        }
        let mut content = BigInt::zero();
        for c in self.m.iter().flatten() {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        let lead_negative = self
            .m
            .iter()
            .find_map(|e| e.last())
            .is_some_and(|c| c.is_negative());
        if lead_negative {
            content = -content;
        }
        if !content.is_one() {
            for c in self.m.iter_mut().flatten() {
                *c = &*c / &content;
            }
        }
        let mut hc = BigInt::zero();
        for c in &self.h {
            hc = hc.gcd(c);
        }
        if !hc.is_one() {
            for c in self.h.iter_mut() {
                *c = &*c / &hc;
            }
        }
    }

    /// `self ∘ o`
    pub(crate) fn compose(&self, o: &IntMap) -> IntMap {
        let s = if o.base_is_identity() {
            self.m.clone()
        } else {
            let n = self
                .m
                .iter()
                .map(|e| e.len().saturating_sub(1))
                .max()
                .unwrap_or(0);
            self.m.clone().map(|e| substitute(&e, &o.h, n))
        };
        let [a, b, c, d] = &s;
        let [e, f, g, h] = &o.m;
        let m = [
            add(&int_mul(a, e), &int_mul(b, g)),
            add(&int_mul(a, f), &int_mul(b, h)),
            add(&int_mul(c, e), &int_mul(d, g)),
            add(&int_mul(c, f), &int_mul(d, h)),
        ];
        let [p, q, r, t] = &self.h;
        let [u, v, w, x] = &o.h;
        let h = [p * u + q * w, p * v + q * x, r * u + t * w, r * v + t * x];
        let mut out = IntMap { m, h };
        out.normalize();
        out
    }

    /// Same algorithm as the generic plane degree.
    pub(crate) fn plane_degree(&self) -> u64 {
        let deg = |p: &IntPoly| p.len().checked_sub(1);
        let [a, b, c, d] = &self.m;
        let n = [deg(a).map(|x| x + 1), deg(b), deg(c).map(|x| x + 1), deg(d)]
            .into_iter()
            .flatten()
            .max()
            .expect("nonsingular");
        let (l2, l2_val) = if self.h[2].is_zero() {
            (vec![self.h[3].clone()], 1)
        } else {
            (linear(&self.h[2], &self.h[3]), 0)
        };
        let form = |p: &IntPoly, x_linear: bool, times_l2: bool| {
            deg(p).map(|dp| {
                let val = n - dp - usize::from(x_linear);
                if times_l2 {
                    (int_mul(p, &l2), val + l2_val)
                } else {
                    (p.clone(), val)
                }
            })
        };
        let forms = [
            form(a, true, true),
            form(b, false, true),
            form(c, true, false),
            form(d, false, false),
        ];
        let mut g: Option<IntPoly> = None;
        let mut val = usize::MAX;
        for (p, v) in forms.into_iter().flatten() {
            val = val.min(v);
            g = Some(match g {
                None => p,
                Some(g) if g.len() == 1 => g,
                Some(g) => int_poly_gcd(&g, &p),
            });
        }
        let common = g.map_or(0, |g| g.len() - 1) + val;
        (n + 1 - common) as u64
    }
}
