use crate::arith::{poly_gcd, substitute, Field, UniPoly};
use crate::error::{Error, Result};

use super::Moebius;

/// Polynomial 2x2 matrix `[[A, B], [C, D]]` acting on the fiber coordinate.
///
/// Always kept as the canonical representative of its class in
/// `PGL(2, K(y))`: the four entries have no common factor and the first
/// nonzero entry has leading coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiberMatrix<K> {
    a: UniPoly<K>,
    b: UniPoly<K>,
    c: UniPoly<K>,
    d: UniPoly<K>,
}

impl<K: Field> FiberMatrix<K> {
    pub fn new(a: UniPoly<K>, b: UniPoly<K>, c: UniPoly<K>, d: UniPoly<K>) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::domain("singular fiber matrix (AD - BC = 0)"));
        }
        Ok(Self::normalized(a, b, c, d))
    }

    pub fn identity() -> Self {
        FiberMatrix {
            a: UniPoly::one(),
            b: UniPoly::zero(),
            c: UniPoly::zero(),
            d: UniPoly::one(),
        }
    }

    /// `[[p, 0], [0, q]]`
    pub fn diagonal(p: UniPoly<K>, q: UniPoly<K>) -> Result<Self> {
        Self::new(p, UniPoly::zero(), UniPoly::zero(), q)
    }

    fn normalized(a: UniPoly<K>, b: UniPoly<K>, c: UniPoly<K>, d: UniPoly<K>) -> Self {
        let mut g: Option<UniPoly<K>> = None;
        for e in [&a, &b, &c, &d] {
            if e.is_zero() {
                continue;
            }
            g = Some(match g {
                None => e.monic(),
                Some(g) if g.is_one() => g,
                Some(g) => poly_gcd(&g, e).expect("nonzero"),
            });
        }
        let g = g.expect("nonsingular matrix has a nonzero entry");
        let [a, b, c, d] = if g.is_constant() {
            [a, b, c, d]
        } else {
            [a, b, c, d].map(|e| e.exact_div(&g).expect("gcd divides"))
        };
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find_map(|e| e.lc().cloned())
            .expect("nonzero entry");
        if lead.is_one() {
            return FiberMatrix { a, b, c, d };
        }
        let inv = K::one() / lead;
        FiberMatrix {
            a: a.scale(&inv),
            b: b.scale(&inv),
            c: c.scale(&inv),
            d: d.scale(&inv),
        }
    }

    pub fn a(&self) -> &UniPoly<K> {
        &self.a
    }
    pub fn b(&self) -> &UniPoly<K> {
        &self.b
    }
    pub fn c(&self) -> &UniPoly<K> {
        &self.c
    }
    pub fn d(&self) -> &UniPoly<K> {
        &self.d
    }

    pub fn entries(&self) -> [&UniPoly<K>; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn trace(&self) -> UniPoly<K> {
        &self.a + &self.d
    }

    pub fn det(&self) -> UniPoly<K> {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `Tr^2 - 4 det`, the discriminant of the characteristic polynomial.
    pub fn discriminant(&self) -> UniPoly<K> {
        let t = self.trace();
        &t * &t - self.det().scale(&K::from_i64(4))
    }

    /// Largest entry degree.
    pub fn max_degree(&self) -> usize {
        self.entries().iter().map(|e| e.deg0()).max().unwrap_or(0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::normalized(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    /// `[[D, -B], [-C, A]]`, normalized.
    pub fn adjugate(&self) -> Self {
        Self::normalized(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    /// The matrix with `y` replaced by `h(y)`, cleared of denominators.
    pub fn substitute_base(&self, h: &Moebius<K>) -> Self {
        if h.is_identity() {
            return self.clone();
        }
        let n = self.max_degree();
        let m = h.entries();
        Self::normalized(
            substitute(&self.a, m, n),
            substitute(&self.b, m, n),
            substitute(&self.c, m, n),
            substitute(&self.d, m, n),
        )
    }

    pub fn map_field<L: Field>(&self, f: impl Fn(&K) -> L + Copy) -> FiberMatrix<L> {
        FiberMatrix::normalized(self.a.map(f), self.b.map(f), self.c.map(f), self.d.map(f))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        format!(
            "[[{}, {}],[{}, {}]]",
            self.a.to_string_in(var),
            self.b.to_string_in(var),
            self.c.to_string_in(var),
            self.d.to_string_in(var)
        )
    }
}

impl<K: Field> std::fmt::Debug for FiberMatrix<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiberMatrix({})", self.to_string_in("y"))
    }
}
