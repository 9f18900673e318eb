//! Dense univariate polynomials over an exact [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Sqrt};
use crate::error::{Error, Result};
use crate::Rational;

/// Polynomial with coefficients stored low-to-high.
///
/// The zero polynomial has an empty coefficient vector and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<K> {
    coeffs: Vec<K>,
}

pub(crate) fn trim<K: Field>(v: &mut Vec<K>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn schoolbook_mul<K: Field>(a: &[K], b: &[K]) -> Vec<K> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![K::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x.clone() * y);
        }
    }
    trim(&mut out);
    out
}

fn make_monic<K: Field>(v: &mut [K]) {
    if let Some(lc) = v.last().cloned() {
        if !lc.is_one() {
            let inv = K::one() / lc;
            for c in v.iter_mut() {
                *c = c.clone() * &inv;
            }
        }
    }
}

/// Remainder of `a` modulo `b` (b nonzero), in place.
fn rem_in_place<K: Field>(a: &mut Vec<K>, b: &[K]) {
    let db = b.len() - 1;
    let inv = K::one() / b[db].clone();
    while a.len() > db {
        let top = a.len() - 1;
        let q = a[top].clone() * &inv;
        let shift = top - db;
        for (j, bj) in b.iter().enumerate() {
            a[shift + j] -= &(q.clone() * bj);
        }
        a.pop();
        trim(a);
    }
}

pub(crate) fn euclid_gcd<K: Field>(a: &[K], b: &[K]) -> Vec<K> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    if r0.len() < r1.len() {
        std::mem::swap(&mut r0, &mut r1);
    }
    while !r1.is_empty() {
        make_monic(&mut r1);
        rem_in_place(&mut r0, &r1);
        std::mem::swap(&mut r0, &mut r1);
    }
    make_monic(&mut r0);
    r0
}

impl<K: Field> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        trim(&mut coeffs);
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); n + 1];
        coeffs[n] = c;
        UniPoly { coeffs }
    }

    /// `a*y + b`
    pub fn linear(a: K, b: K) -> Self {
        Self::new(vec![b, a])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| K::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for callers that
    /// have already excluded zero or treat it like a constant.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * K::from_i64(i as i64))
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, s: &K) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        make_monic(&mut coeffs);
        UniPoly { coeffs }
    }

    pub fn shift(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(dd) = d.degree() else {
            return Err(Error::domain("polynomial division by zero"));
        };
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![K::zero(); r.len() - dd];
        let inv = K::one() / d.coeffs[dd].clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let c = r[top].clone() * &inv;
            let shift = top - dd;
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[shift + j] -= &(c.clone() * dj);
            }
            q[shift] = c;
            r.pop();
            trim(&mut r);
        }
        Ok((Self::new(q), Self::new(r)))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Multiplicity of `d` (nonconstant) as a factor of `self` (nonzero), and the cofactor.
    pub fn split_power(&self, d: &Self) -> (u32, Self) {
        assert!(!d.is_constant() && !self.is_zero());
        let mut p = 0;
        let mut rest = self.clone();
        while let Some(q) = rest.exact_div(d) {
            rest = q;
            p += 1;
        }
        (p, rest)
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> UniPoly<L> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_quad(&self) -> UniPoly<super::QuadScalar> {
        self.map(|c| c.to_quad())
    }

    pub fn to_rational(&self) -> Option<UniPoly<Rational>> {
        let coeffs: Option<Vec<_>> = self.coeffs.iter().map(|c| c.to_rational()).collect();
        coeffs.map(UniPoly::new)
    }

    /// Text form in the variable `var`, highest degree first, e.g. `y^2-1/2*y+3`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag, parens) = c.display_parts();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                if parens && !out.is_empty() {
                    out.push_str(&format!("({mag})"));
                } else {
                    out.push_str(&mag);
                }
            } else if mag == "1" {
                out.push_str(&mono);
            } else if parens {
                out.push_str(&format!("({mag})*{mono}"));
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl UniPoly<Rational> {
    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients and a positive leading coefficient. Zero for zero.
    pub fn content(&self) -> Rational {
        let Some(lc) = self.lc() else {
            return Rational::zero();
        };
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let c = Rational::new(num, den);
        if lc.is_negative() {
            -c
        } else {
            c
        }
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.scale(&(Rational::one() / c))
    }
}

/// Monic gcd. Fails only when both inputs are zero.
pub fn poly_gcd<K: Field>(p: &UniPoly<K>, q: &UniPoly<K>) -> Result<UniPoly<K>> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(Error::domain("gcd(0, 0) is undefined")),
        (true, false) => Ok(q.monic()),
        (false, true) => Ok(p.monic()),
        _ => {
            if p.is_constant() || q.is_constant() {
                return Ok(UniPoly::one());
            }
            Ok(UniPoly::new(K::poly_gcd(&p.coeffs, &q.coeffs)))
        }
    }
}

/// Yun's squarefree decomposition: monic, squarefree, pairwise coprime
/// factors with their multiplicities. Constants decompose to the empty list.
pub fn squarefree_decomposition<K: Field>(p: &UniPoly<K>) -> Result<Vec<(UniPoly<K>, u32)>> {
    if p.is_zero() {
        return Err(Error::domain(
            "squarefree decomposition of the zero polynomial",
        ));
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let f = p.monic();
    let df = f.derivative();
    let b = poly_gcd(&f, &df)?;
    let mut c = f.exact_div(&b).expect("gcd divides");
    let mut d = df.exact_div(&b).expect("gcd divides") - c.derivative();
    let mut i = 1;
    while !c.is_constant() {
        let a = poly_gcd(&c, &d)?;
        c = c.exact_div(&a).expect("gcd divides");
        d = d.exact_div(&a).expect("gcd divides") - c.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// `Some((c, h))` with `h` monic and `p = c*h^2` when `p` is a square up to
/// its leading coefficient `c`; `None` otherwise.
pub fn poly_sqrt<K: Field>(p: &UniPoly<K>) -> Result<Option<(K, UniPoly<K>)>> {
    let Some(lc) = p.lc().cloned() else {
        return Err(Error::domain("square root of the zero polynomial"));
    };
    let mut h = UniPoly::one();
    for (f, m) in squarefree_decomposition(p)? {
        if m % 2 == 1 {
            return Ok(None);
        }
        h = &h * &f.pow(m / 2);
    }
    Ok(Some((lc, h)))
}

/// Square root of `p` itself, `δ` with `δ^2 = p`, possibly with an irrational
/// scalar factor `sqrt(c)`. `None` when `p` is not a square in `K̄[y]`.
pub fn poly_sqrt_exact<K: Field>(p: &UniPoly<K>) -> Result<Option<(Sqrt<K>, UniPoly<K>)>> {
    Ok(poly_sqrt(p)?.map(|(c, h)| (c.sqrt(), h)))
}

/// Numerator of `p((a y + b)/(c y + d))` over the denominator `(c y + d)^deg p`.
///
/// Returns `(num, den_power, den_linear)`.
pub fn compose_with_moebius<K: Field>(
    p: &UniPoly<K>,
    h: &[K; 4],
) -> Result<(UniPoly<K>, usize, UniPoly<K>)> {
    let [a, b, c, d] = h;
    if (a.clone() * d - b.clone() * c).is_zero() {
        return Err(Error::domain("singular Moebius transformation"));
    }
    let den = UniPoly::linear(c.clone(), d.clone());
    let n = p.deg0();
    Ok((substitute(p, h, n), n, den))
}

/// `p((a y + b)/(c y + d)) * (c y + d)^n` for `n >= deg p`.
pub(crate) fn substitute<K: Field>(p: &UniPoly<K>, h: &[K; 4], n: usize) -> UniPoly<K> {
    let [a, b, c, d] = h;
    let num = UniPoly::linear(a.clone(), b.clone());
    let den = UniPoly::linear(c.clone(), d.clone());
    if p.is_zero() {
        return UniPoly::zero();
    }
    debug_assert!(n >= p.deg0());
    // powers of num and den up to n
    let mut num_pows = vec![UniPoly::one()];
    let mut den_pows = vec![UniPoly::one()];
    for i in 1..=n {
        num_pows.push(&num_pows[i - 1] * &num);
        den_pows.push(&den_pows[i - 1] * &den);
    }
    let mut acc = UniPoly::zero();
    for (i, ci) in p.coeffs.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        acc = acc + (&num_pows[i] * &den_pows[n - i]).scale(ci);
    }
    acc
}

impl<K: Field> fmt::Debug for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.to_string_in("y"))
    }
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("y"))
    }
}

impl<'a, K: Field> Add<&'a UniPoly<K>> for &'a UniPoly<K> {
    type Output = UniPoly<K>;
    fn add(self, o: &'a UniPoly<K>) -> UniPoly<K> {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        UniPoly::new(coeffs)
    }
}

impl<'a, K: Field> Sub<&'a UniPoly<K>> for &'a UniPoly<K> {
    type Output = UniPoly<K>;
    fn sub(self, o: &'a UniPoly<K>) -> UniPoly<K> {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < o.coeffs.len() {
            coeffs.resize(o.coeffs.len(), K::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&o.coeffs) {
            *c -= s;
        }
        UniPoly::new(coeffs)
    }
}

impl<'a, K: Field> Mul<&'a UniPoly<K>> for &'a UniPoly<K> {
    type Output = UniPoly<K>;
    fn mul(self, o: &'a UniPoly<K>) -> UniPoly<K> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        if self.coeffs.len() == 1 {
            return o.scale(&self.coeffs[0]);
        }
        if o.coeffs.len() == 1 {
            return self.scale(&o.coeffs[0]);
        }
        UniPoly::new(K::poly_mul(&self.coeffs, &o.coeffs))
    }
}

impl<K: Field> Add for UniPoly<K> {
    type Output = UniPoly<K>;
    fn add(self, o: UniPoly<K>) -> UniPoly<K> {
        &self + &o
    }
}

impl<K: Field> Sub for UniPoly<K> {
    type Output = UniPoly<K>;
    fn sub(self, o: UniPoly<K>) -> UniPoly<K> {
        &self - &o
    }
}

impl<K: Field> Mul for UniPoly<K> {
    type Output = UniPoly<K>;
    fn mul(self, o: UniPoly<K>) -> UniPoly<K> {
        &self * &o
    }
}

impl<K: Field> Neg for UniPoly<K> {
    type Output = UniPoly<K>;
    fn neg(self) -> UniPoly<K> {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPoly, QuadScalar};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn gcd_examples() {
        // gcd(y(y+2), y^5) = y
        assert_eq!(
            poly_gcd(&p(&[0, 2, 1]), &p(&[0, 0, 0, 0, 0, 1])).unwrap(),
            p(&[0, 1])
        );
        // gcd(p, 0) = p made monic
        assert_eq!(
            poly_gcd(&p(&[2, 4]), &QPoly::zero()).unwrap(),
            p(&[1, 2]).monic()
        );
        assert_eq!(
            poly_gcd(&p(&[2, 4]), &QPoly::zero()).unwrap().to_string(),
            "y+1/2"
        );
        // gcd(y(y+1)(y+2), y^2(y+2)) = y(y+2)
        let a = p(&[0, 1]) * p(&[1, 1]) * p(&[2, 1]);
        let b = p(&[0, 0, 1]) * p(&[2, 1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), p(&[0, 2, 1]));
        assert!(poly_gcd(&QPoly::zero(), &QPoly::zero()).is_err());
    }

    #[test]
    fn gcd_by_brute_force_divisor_search() {
        // the common monomial divisors of y(y+2) and y^5 are 1 and y
        let a = p(&[0, 2, 1]);
        let b = p(&[0, 0, 0, 0, 0, 1]);
        let common: Vec<usize> = (0..=5)
            .filter(|&k| {
                let m = QPoly::monomial(q(1, 1), k);
                m.divides(&a) && m.divides(&b)
            })
            .collect();
        assert_eq!(common, vec![0, 1]);
        assert_eq!(
            poly_gcd(&a, &b).unwrap().degree(),
            Some(*common.last().unwrap())
        );
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            squarefree_decomposition(&p(&[1, 2, 1])).unwrap(),
            vec![(p(&[1, 1]), 2)]
        );
        let f = p(&[0, 1]) * p(&[1, 1]).pow(2);
        assert_eq!(
            squarefree_decomposition(&f).unwrap(),
            vec![(p(&[0, 1]), 1), (p(&[1, 1]), 2)]
        );
        assert!(squarefree_decomposition(&p(&[5])).unwrap().is_empty());
        assert!(squarefree_decomposition(&QPoly::zero()).is_err());
    }

    #[test]
    fn sqrt_examples() {
        // ((1-y)y - 1)^2 = (y^2 - y + 1)^2
        let inner = p(&[-1, 1, -1]);
        let (c, h) = poly_sqrt(&(&inner * &inner)).unwrap().unwrap();
        assert_eq!(c, q(1, 1));
        assert_eq!(h, p(&[1, -1, 1]));
        assert!(poly_sqrt(&p(&[0, 0, 0, 1])).unwrap().is_none());
        let (c, h) = poly_sqrt(&(p(&[1, 1]).pow(2).scale(&q(2, 1))))
            .unwrap()
            .unwrap();
        assert_eq!(c, q(2, 1));
        assert_eq!(h, p(&[1, 1]));
        assert!(matches!(c.sqrt(), Sqrt::Extension(_)));
        assert!(poly_sqrt(&QPoly::zero()).is_err());
    }

    #[test]
    fn moebius_substitution_examples() {
        let one = q(1, 1);
        let zero = q(0, 1);
        // y^2 under y -> y+1
        let h = [one.clone(), one.clone(), zero.clone(), one.clone()];
        let (num, k, den) = compose_with_moebius(&p(&[0, 0, 1]), &h).unwrap();
        assert_eq!(num, p(&[1, 2, 1]));
        assert_eq!(k, 2);
        assert_eq!(den, p(&[1]));
        // y under y -> 1/y
        let h = [zero.clone(), one.clone(), one.clone(), zero.clone()];
        let (num, k, den) = compose_with_moebius(&p(&[0, 1]), &h).unwrap();
        assert_eq!((num, k, den), (p(&[1]), 1, p(&[0, 1])));
        // y^2+1 under y -> (y-1)/(y+1)
        let h = [one.clone(), -one.clone(), one.clone(), one.clone()];
        let (num, k, den) = compose_with_moebius(&p(&[1, 0, 1]), &h).unwrap();
        assert_eq!((num, k, den), (p(&[2, 0, 2]), 2, p(&[1, 1])));
        let singular = [one.clone(), one.clone(), one.clone(), one.clone()];
        assert!(compose_with_moebius(&p(&[1]), &singular).is_err());
    }

    #[test]
    fn content_and_primitive_part() {
        let f = QPoly::new(vec![q(-1, 2), q(3, 4)]);
        assert_eq!(f.content(), q(1, 4));
        assert_eq!(f.primitive_part(), p(&[-2, 3]));
        let g = QPoly::new(vec![q(2, 1), q(-4, 1)]);
        assert_eq!(g.primitive_part(), p(&[-1, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 2, 1]).to_string(), "y^2+2*y");
        assert_eq!(
            QPoly::new(vec![q(-3, 1), q(0, 1), q(1, 2)]).to_string_in("x"),
            "1/2*x^2-3"
        );
        assert_eq!(p(&[1, -1]).to_string(), "-y+1");
        assert_eq!(QPoly::zero().to_string(), "0");
        let r2 = QuadScalar::sqrt_of(2).unwrap();
        let f = UniPoly::new(vec![r2.clone(), QuadScalar::one() + &r2, -r2.clone()]);
        assert_eq!(f.to_string(), "-sqrt(2)*y^2+(1+sqrt(2))*y+sqrt(2)");
    }

    #[test]
    fn euclid_over_extension() {
        let r2 = QuadScalar::sqrt_of(2).unwrap();
        let y = UniPoly::<QuadScalar>::x();
        // (y - √2)(y + 1) and (y - √2)(y - 1)
        let a = &(&y - &UniPoly::constant(r2.clone())) * &(&y + &UniPoly::one());
        let b = &(&y - &UniPoly::constant(r2.clone())) * &(&y - &UniPoly::one());
        assert_eq!(poly_gcd(&a, &b).unwrap(), &y - &UniPoly::constant(r2));
    }
}
