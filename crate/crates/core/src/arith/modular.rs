//! Fast paths for polynomials over the rationals.
//!
//! Products are formed over the integers after clearing denominators. The gcd
//! is computed from images modulo word-sized primes, combined by CRT, and
//! certified by exact trial division, so the result is always exact.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{euclid_gcd, trim};
use crate::Rational;

const PRIME_COUNT: usize = 256;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_COUNT);
        let mut n = (1u64 << 62) - 1;
        while out.len() < PRIME_COUNT {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = (x % p).to_i128().expect("residue fits");
    if r < 0 {
        (r + p as i128) as u64
    } else {
        r as u64
    }
}

fn reduce_poly(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|c| reduce(c, p)).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd over `Z/p`.
fn gcd_mod(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut r0, mut r1) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !r1.is_empty() {
        let inv = inv_mod(*r1.last().unwrap(), p);
        let db = r1.len() - 1;
        while r0.len() > db {
            let top = r0.len() - 1;
            let q = mul_mod(r0[top], inv, p);
            if q != 0 {
                let shift = top - db;
                for (j, &bj) in r1.iter().enumerate() {
                    let t = mul_mod(q, bj, p);
                    let v = r0[shift + j];
                    r0[shift + j] = if v >= t { v - t } else { v + p - t };
                }
            }
            r0.pop();
            while r0.last() == Some(&0) {
                r0.pop();
            }
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    if let Some(&lc) = r0.last() {
        let inv = inv_mod(lc, p);
        for c in r0.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    r0
}

/// Whether the primitive polynomial `h` divides `a` over the integers.
fn divides_int(h: &[BigInt], a: &[BigInt]) -> bool {
    let dh = h.len() - 1;
    if a.len() < h.len() {
        return a.is_empty();
    }
    let lc = &h[dh];
    let mut r = a.to_vec();
    while r.len() > dh {
        let top = r.len() - 1;
        let (q, rem) = r[top].div_rem(lc);
        if !rem.is_zero() {
            return false;
        }
        let shift = top - dh;
        if !q.is_zero() {
            for (j, hj) in h.iter().enumerate() {
                r[shift + j] -= &q * hj;
            }
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r.is_empty()
}

pub(crate) fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Integer polynomial proportional to `a`, with coprime coefficients.
fn clear_rational(a: &[Rational]) -> Vec<BigInt> {
    let (ints, _) = scale_to_int(a);
    primitive_int(ints)
}

/// `(ints, den)` with `a[i] = ints[i] / den`.
pub(crate) fn scale_to_int(a: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in a {
        if !c.denom().is_one() {
            den = den.lcm(c.denom());
        }
    }
    let ints = a
        .iter()
        .map(|c| {
            if den.is_one() {
                c.numer().clone()
            } else {
                c.numer() * (&den / c.denom())
            }
        })
        .collect();
    (ints, den)
}

pub(crate) fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

pub(crate) fn rational_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (ai, ad) = scale_to_int(a);
    let (bi, bd) = scale_to_int(b);
    let den = ad * bd;
    let mut out: Vec<Rational> = int_mul(&ai, &bi)
        .into_iter()
        .map(|c| {
            if den.is_one() {
                Rational::from_integer(c)
            } else {
                Rational::new(c, den.clone())
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Gcd of two nonzero primitive integer polynomials, primitive with positive
/// leading coefficient. `None` when the prime table runs out.
pub(crate) fn int_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.len() == 1 || b.len() == 1 {
        return Some(vec![BigInt::one()]);
    }
    let lca = a.last().unwrap();
    let lcb = b.last().unwrap();
    let g = lca.gcd(lcb);
    let mut best = usize::MAX;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<Vec<BigInt>> = None;

    for &p in primes() {
        if reduce(lca, p) == 0 || reduce(lcb, p) == 0 {
            continue;
        }
        let hp = gcd_mod(reduce_poly(a, p), reduce_poly(b, p), p);
        let deg = hp.len() - 1;
        if deg == 0 {
            return Some(vec![BigInt::one()]);
        }
        if deg > best {
            continue;
        }
        let gp = reduce(&g, p);
        let image: Vec<u64> = hp.iter().map(|&c| mul_mod(c, gp, p)).collect();
        if deg < best {
            best = deg;
            residues = image.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            last = None;
        } else {
            let m_inv = inv_mod(reduce(&modulus, p), p);
            for (r, &h) in residues.iter_mut().zip(&image) {
                let rp = reduce(r, p);
                let diff = if h >= rp { h - rp } else { h + p - rp };
                let t = mul_mod(diff, m_inv, p);
                *r += &modulus * t;
            }
            modulus *= p;
        }
        let half = &modulus >> 1;
        let candidate: Vec<BigInt> = residues
            .iter()
            .map(|r| if r > &half { r - &modulus } else { r.clone() })
            .collect();
        if last.as_ref() == Some(&candidate) {
            let h = primitive_int(candidate.clone());
            if divides_int(&h, a) && divides_int(&h, b) {
                return Some(h);
            }
        }
        last = Some(candidate);
    }
    None
}

/// Quotient `a / b` over the integers when `b` divides `a` exactly.
pub(crate) fn int_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() <= db {
        return None;
    }
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let (c, rem) = r[top].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        let shift = top - db;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] -= &c * bj;
            }
        }
        q[shift] = c;
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r.is_empty().then_some(q)
}

/// Primitive gcd with positive leading coefficient of two nonzero integer
/// polynomials.
pub(crate) fn int_poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let a = primitive_int(a.to_vec());
    let b = primitive_int(b.to_vec());
    if let Some(g) = int_gcd(&a, &b) {
        return g;
    }
    let to_q =
        |v: &[BigInt]| -> Vec<Rational> { v.iter().cloned().map(Rational::from_integer).collect() };
    let g = euclid_gcd(&to_q(&a), &to_q(&b));
    clear_rational(&g)
}

pub(crate) fn rational_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let ai = clear_rational(a);
    let bi = clear_rational(b);
    match int_gcd(&ai, &bi) {
        Some(h) => {
            let lc = Rational::from_integer(h.last().unwrap().clone());
            h.into_iter()
                .map(|c| Rational::from_integer(c) / &lc)
                .collect()
        }
        None => euclid_gcd(a, b),
    }
}
