use std::fmt;

use crate::arith::{Field, QuadScalar, RatFunc, UniPoly};
use crate::error::{Error, Result};
use crate::Rational;

use super::{FiberMatrix, Moebius};

/// Recognized subgroups of the Jonquieres group, read off the canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupTag {
    /// `(b(y) x, y)`
    Jm,
    /// `(x + a(y), y)`
    Ja,
    /// `((P x + F)/(x + P), y)`
    JfShape,
    /// Trivial base action, none of the above.
    J0,
    General,
}

impl SubgroupTag {
    pub fn as_str(self) -> &'static str {
        match self {
            SubgroupTag::Jm => "Jm",
            SubgroupTag::Ja => "Ja",
            SubgroupTag::JfShape => "JF-shape",
            SubgroupTag::J0 => "J0",
            SubgroupTag::General => "general",
        }
    }
}

impl fmt::Display for SubgroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A birational map `(x, y) -> (M(y) . x, h(y))` preserving the pencil of
/// lines `y = const`.
///
/// Both parts are canonical, so `==` is equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct JonquieresMap<K> {
    m: FiberMatrix<K>,
    h: Moebius<K>,
}

impl<K: Field> JonquieresMap<K> {
    pub fn new(m: FiberMatrix<K>, h: Moebius<K>) -> Self {
        JonquieresMap { m, h }
    }

    /// Element of `J0` with the given fiber matrix.
    pub fn fiberwise(m: FiberMatrix<K>) -> Self {
        Self::new(m, Moebius::identity())
    }

    /// Element of `J0` from the four entries.
    pub fn from_entries(
        a: UniPoly<K>,
        b: UniPoly<K>,
        c: UniPoly<K>,
        d: UniPoly<K>,
    ) -> Result<Self> {
        Ok(Self::fiberwise(FiberMatrix::new(a, b, c, d)?))
    }

    pub fn identity() -> Self {
        Self::new(FiberMatrix::identity(), Moebius::identity())
    }

    pub fn fiber(&self) -> &FiberMatrix<K> {
        &self.m
    }

    pub fn base(&self) -> &Moebius<K> {
        &self.h
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity() && self.h.is_identity()
    }

    pub fn is_j0(&self) -> bool {
        self.h.is_identity()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        let m = self.m.substitute_base(&other.h).mul(&other.m);
        JonquieresMap {
            m,
            h: self.h.compose(&other.h),
        }
    }

    pub fn inverse(&self) -> Self {
        let hinv = self.h.inverse();
        JonquieresMap {
            m: self.m.adjugate().substitute_base(&hinv),
            h: hinv,
        }
    }

    /// `self^k` by repeated squaring; each product is renormalized.
    pub fn iterate(&self, mut k: u64) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.compose(&base);
            }
        }
        acc
    }

    /// `psi ∘ self ∘ psi^-1`
    pub fn conjugate_by(&self, psi: &Self) -> Self {
        psi.compose(self).compose(&psi.inverse())
    }

    /// Image of an affine point, `None` when a denominator vanishes.
    pub fn apply(&self, x: &K, y: &K) -> Option<(K, K)> {
        let num = self.m.a().eval(y) * x + &self.m.b().eval(y);
        let den = self.m.c().eval(y) * x + &self.m.d().eval(y);
        if den.is_zero() {
            return None;
        }
        Some((num / den, self.h.apply(y)?))
    }

    /// `Tr^2 / det` of the canonical matrix.
    pub fn baum_bott(&self) -> Result<RatFunc<K>> {
        if !self.is_j0() {
            return Err(Error::domain(
                "Baum-Bott index is defined for maps with trivial base action",
            ));
        }
        let t = self.m.trace();
        RatFunc::new(&t * &t, self.m.det())
    }

    pub fn is_elliptic_j0(&self) -> Result<bool> {
        Ok(self.baum_bott()?.is_constant())
    }

    pub fn subgroup(&self) -> SubgroupTag {
        if !self.is_j0() {
            return SubgroupTag::General;
        }
        let [a, b, c, d] = self.m.entries();
        if b.is_zero() && c.is_zero() {
            SubgroupTag::Jm
        } else if c.is_zero() && a == d {
            SubgroupTag::Ja
        } else if a == d && !c.is_zero() && c.is_constant() {
            SubgroupTag::JfShape
        } else {
            SubgroupTag::J0
        }
    }

    pub fn map_field<L: Field>(&self, f: impl Fn(&K) -> L + Copy) -> JonquieresMap<L> {
        JonquieresMap {
            m: self.m.map_field(f),
            h: self.h.map_field(f),
        }
    }

    pub fn to_quad(&self) -> JonquieresMap<QuadScalar> {
        self.map_field(|c| c.to_quad())
    }

    /// `Some` when every coefficient is rational.
    pub fn to_rational(&self) -> Option<JonquieresMap<Rational>> {
        let rational = self.m.entries().iter().all(|e| e.to_rational().is_some())
            && self.h.entries().iter().all(|c| c.to_rational().is_some());
        rational.then(|| self.map_field(|c| c.to_rational().expect("checked")))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        format!(
            "({}, {})",
            self.m.to_string_in(var),
            self.h.to_string_in(var)
        )
    }
}

impl<K: Field> fmt::Debug for JonquieresMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JonquieresMap{}", self.to_string_in("y"))
    }
}

impl<K: Field> fmt::Display for JonquieresMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("y"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QMap, QPoly};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn jm(b: QPoly) -> QMap {
        QMap::from_entries(b, QPoly::zero(), QPoly::zero(), QPoly::one()).unwrap()
    }

    fn ft(t: i64) -> QMap {
        QMap::new(
            FiberMatrix::diagonal(p(&[0, 1]), p(&[1, 1])).unwrap(),
            Moebius::translation(q(t)),
        )
    }

    #[test]
    fn compose_telescopes_along_translations() {
        let f = ft(1);
        let f2 = f.compose(&f);
        assert_eq!(
            f2.fiber().entries(),
            [&p(&[0, 1]), &QPoly::zero(), &QPoly::zero(), &p(&[2, 1])]
        );
        assert_eq!(f2.base(), &Moebius::translation(q(2)));
        let f5 = f.iterate(5);
        assert_eq!(f5.fiber().d(), &p(&[5, 1]));
        assert_eq!(f5.base(), &Moebius::translation(q(5)));
    }

    #[test]
    fn group_law_examples() {
        let f = jm(p(&[0, 1, -1]));
        assert_eq!(f.compose(&QMap::identity()), f);
        assert!(f.compose(&f.inverse()).is_identity());
        assert_eq!(
            f.inverse(),
            QMap::from_entries(p(&[1]), QPoly::zero(), QPoly::zero(), p(&[0, 1, -1])).unwrap()
        );
        assert_eq!(f.iterate(0), QMap::identity());
        assert_eq!(f.iterate(3), jm(p(&[0, 1, -1]).pow(3)));
        assert!(QMap::identity().inverse().is_identity());

        let g = QMap::new(
            FiberMatrix::diagonal(p(&[0, 1]), p(&[1])).unwrap(),
            Moebius::scaling(q(-1)).unwrap(),
        );
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
        assert_eq!(g.iterate(2), jm(p(&[0, 0, -1])));
    }

    #[test]
    fn compose_agrees_with_pointwise_evaluation() {
        let f = QMap::new(
            FiberMatrix::new(p(&[1, 2]), p(&[0, 0, 1]), p(&[1]), p(&[3, 0, 1])).unwrap(),
            Moebius::new(q(1), q(2), q(1), q(-1)).unwrap(),
        );
        let g = QMap::new(
            FiberMatrix::new(p(&[0, 1]), p(&[1]), p(&[-1, 1]), p(&[2])).unwrap(),
            Moebius::new(q(2), q(0), q(1), q(3)).unwrap(),
        );
        let fg = f.compose(&g);
        let mut checked = 0;
        for (x, y) in [(2, 5), (-3, 7), (11, 4), (6, -5), (1, 9)] {
            let (x, y) = (q(x), q(y));
            let direct = g.apply(&x, &y).and_then(|(u, v)| f.apply(&u, &v));
            if let Some(v) = direct {
                assert_eq!(fg.apply(&x, &y), Some(v));
                checked += 1;
            }
        }
        assert!(checked >= 3);
    }

    #[test]
    fn baum_bott_examples() {
        let f = jm(p(&[0, 1, -1]));
        let bb = f.baum_bott().unwrap();
        // ((1-y)y + 1)^2 / ((1-y)y)
        let t = p(&[1, 1, -1]);
        assert_eq!(bb, RatFunc::new(&t * &t, p(&[0, 1, -1])).unwrap());
        assert!(!f.is_elliptic_j0().unwrap());

        let g = QMap::from_entries(p(&[0, 0, -1]), p(&[0, 1]), p(&[1]), QPoly::zero()).unwrap();
        assert_eq!(
            g.baum_bott().unwrap(),
            RatFunc::from_poly(p(&[0, 0, 0, -1]))
        );

        assert_eq!(
            QMap::identity().baum_bott().unwrap(),
            RatFunc::from_poly(p(&[4]))
        );
        assert!(jm(p(&[2])).is_elliptic_j0().unwrap());

        let inv = QMap::from_entries(QPoly::zero(), p(&[1, 0, 3]), p(&[1]), QPoly::zero()).unwrap();
        assert!(inv.baum_bott().unwrap().is_zero());
        assert!(inv.iterate(2).is_identity());

        assert!(ft(1).baum_bott().is_err());
    }

    #[test]
    fn baum_bott_is_conjugation_invariant() {
        let f = QMap::from_entries(
            p(&[0, 2, 1]),
            p(&[0, 0, 0, 0, 0, 1]),
            p(&[1]),
            p(&[0, 2, 1]),
        )
        .unwrap();
        let psi = QMap::from_entries(p(&[1, 1]), p(&[2]), p(&[0, 1]), p(&[1])).unwrap();
        assert_eq!(
            f.conjugate_by(&psi).baum_bott().unwrap(),
            f.baum_bott().unwrap()
        );
    }

    #[test]
    fn subgroups() {
        assert_eq!(jm(p(&[0, 1, -1])).subgroup(), SubgroupTag::Jm);
        let ja = QMap::from_entries(p(&[1]), p(&[0, 0, 1]), QPoly::zero(), p(&[1])).unwrap();
        assert_eq!(ja.subgroup(), SubgroupTag::Ja);
        let jf = QMap::from_entries(
            p(&[0, 2, 1]),
            p(&[0, 0, 0, 0, 0, 1]),
            p(&[1]),
            p(&[0, 2, 1]),
        )
        .unwrap();
        assert_eq!(jf.subgroup(), SubgroupTag::JfShape);
        let j0 = QMap::from_entries(p(&[0, 1]), p(&[1]), p(&[1, 1]), p(&[1])).unwrap();
        assert_eq!(j0.subgroup(), SubgroupTag::J0);
        assert_eq!(ft(1).subgroup(), SubgroupTag::General);
    }
}
