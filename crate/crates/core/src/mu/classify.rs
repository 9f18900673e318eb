use std::fmt;

use crate::arith::{poly_gcd, poly_sqrt, Field, QuadScalar, RatFunc, Sqrt, UniPoly};
use crate::error::{Error, Result};
use crate::jonq::{FiberMatrix, JonquieresMap};
use crate::{QuadMap, QuadPoly};

use super::oracle::mu_oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Elliptic,
    /// The characteristic polynomial has two distinct roots in `C(y)`.
    Case1,
    /// `gcd(Omega, S) = 1`
    Case2a,
    /// `S = Omega^p T`
    Case2b,
    /// `Omega = S^p T`
    Case2c,
    /// None of the gcd patterns applies; `mu` is measured by degree growth.
    Unresolved,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Elliptic => "Elliptic",
            CaseTag::Case1 => "Case1",
            CaseTag::Case2a => "Case2a",
            CaseTag::Case2b => "Case2b",
            CaseTag::Case2c => "Case2c",
            CaseTag::Unresolved => "Unresolved",
        }
    }

    pub const ALL: [CaseTag; 6] = [
        CaseTag::Elliptic,
        CaseTag::Case1,
        CaseTag::Case2a,
        CaseTag::Case2b,
        CaseTag::Case2c,
        CaseTag::Unresolved,
    ];
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Polynomials certifying a classification.
#[derive(Clone, Debug, PartialEq)]
pub enum Witnesses {
    /// `delta^2 = Tr^2 - 4 det`, and the eigenvalue ratio
    /// `a = (Tr + delta) / (Tr - delta)`.
    Roots {
        delta: QuadPoly,
        ratio: RatFunc<QuadScalar>,
    },
    /// `Tr/2 = P Omega` and `(Tr/2)^2 - det = S Omega`, with `T` and `p` from
    /// the matched power relation.
    Gcd {
        omega: QuadPoly,
        p_f: QuadPoly,
        s_f: QuadPoly,
        t_f: Option<QuadPoly>,
        p: Option<u32>,
    },
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq)]
pub struct MuVerdict {
    pub case: CaseTag,
    /// Absent only for an unresolved map whose degree sequence did not settle.
    pub mu: Option<u64>,
    /// The conjugate model `g` (absent for elliptic maps).
    pub normal_form: Option<QuadMap>,
    pub witnesses: Option<Witnesses>,
}

/// Degrees `(Omega, P, S, T, p)` of the gcd witnesses.
pub type GcdDegrees = (usize, usize, usize, Option<usize>, Option<u32>);

impl MuVerdict {
    pub(crate) fn mu_or_err(&self) -> Result<u64> {
        self.mu
            .ok_or_else(|| Error::Internal(format!("no value of mu for {} map", self.case)))
    }

    /// Degrees `(Omega, P, S, T, p)` of the gcd witnesses.
    pub fn gcd_degrees(&self) -> Option<GcdDegrees> {
        match &self.witnesses {
            Some(Witnesses::Gcd {
                omega,
                p_f,
                s_f,
                t_f,
                p,
            }) => Some((
                omega.deg0(),
                p_f.deg0(),
                s_f.deg0(),
                t_f.as_ref().map(|t| t.deg0()),
                *p,
            )),
            _ => None,
        }
    }

    /// Re-checks the defining identities of the witnesses against `f`.
    pub fn witnesses_hold<K: Field>(&self, f: &JonquieresMap<K>) -> bool {
        let m = f.fiber();
        let tr = m.trace().to_quad();
        let det = m.det().to_quad();
        match &self.witnesses {
            None => matches!(self.case, CaseTag::Elliptic),
            Some(Witnesses::Roots { delta, ratio }) => {
                let disc = &tr * &tr - det.scale(&QuadScalar::from_i64(4));
                let sum = &tr + delta;
                let diff = &tr - delta;
                (delta * delta) == disc
                    && !delta.is_zero()
                    && (ratio.num() * &diff) == (ratio.den() * &sum)
            }
            Some(Witnesses::Gcd {
                omega,
                p_f,
                s_f,
                t_f,
                p,
            }) => {
                let half = tr.scale(&QuadScalar::from_rational(crate::Rational::new(
                    1.into(),
                    2.into(),
                )));
                let f_poly = &half * &half - det;
                let eqs = (p_f * omega) == half && (s_f * omega) == f_poly;
                let coprime = |a: &QuadPoly, b: &QuadPoly| {
                    poly_gcd(a, b).map(|g| g.is_one()).unwrap_or(false)
                };
                let pattern = match (self.case, t_f, p) {
                    (CaseTag::Case2a, None, None) => coprime(omega, s_f),
                    (CaseTag::Case2b, Some(t), Some(p)) => {
                        *p >= 1 && &(&omega.pow(*p) * t) == s_f && coprime(t, omega)
                    }
                    (CaseTag::Case2c, Some(t), Some(p)) => {
                        *p >= 1 && &(&s_f.pow(*p) * t) == omega && coprime(t, s_f)
                    }
                    (CaseTag::Unresolved, None, None) => true,
                    _ => false,
                };
                eqs && pattern
            }
        }
    }
}

pub(crate) fn mu_case2a(d_omega: usize, d_p: usize, d_s: usize) -> u64 {
    (if d_s <= d_omega + 2 * d_p {
        d_omega + 2 * d_p
    } else {
        d_s
    }) as u64
}

pub(crate) fn mu_case2b(d_omega: usize, d_p: usize, d_s: usize) -> u64 {
    (if d_s <= d_omega + 2 * d_p {
        2 * d_p
    } else {
        d_s - d_omega
    }) as u64
}

pub(crate) fn mu_case2c(d_omega: usize, d_p: usize, d_s: usize) -> u64 {
    (2 * d_p + d_omega - d_s) as u64
}

/// Classifies `f` (trivial base action) by the shape of its characteristic
/// polynomial `X^2 - Tr X + det`.
pub fn classify<K: Field>(f: &JonquieresMap<K>) -> Result<MuVerdict> {
    classify_with(f, super::DEFAULT_KMAX)
}

/// As [`classify`]; `kmax` bounds the oracle run used for unresolved maps.
pub fn classify_with<K: Field>(f: &JonquieresMap<K>, kmax: usize) -> Result<MuVerdict> {
    if !f.is_j0() {
        return Err(Error::domain("classification needs a trivial base action"));
    }
    if f.is_elliptic_j0()? {
        return Ok(MuVerdict {
            case: CaseTag::Elliptic,
            mu: Some(0),
            normal_form: None,
            witnesses: None,
        });
    }
    let m = f.fiber();
    let tr = m.trace().to_quad();
    let det = m.det().to_quad();
    let disc = &tr * &tr - det.scale(&QuadScalar::from_i64(4));

    if let Some((c, h)) = poly_sqrt(&disc)? {
        let root = match c.sqrt() {
            Sqrt::Exact(r) => r,
            Sqrt::Extension(r) => r,
            Sqrt::Unsupported => {
                return Err(Error::domain(
                    "eigenvalues need a second quadratic extension of the coefficient field",
                ))
            }
        };
        let delta = h.scale(&root);
        let ratio = RatFunc::new(&tr + &delta, &tr - &delta)?;
        let mu = 2 * ratio.height() as u64;
        let g = QuadMap::from_entries(
            ratio.num().clone(),
            UniPoly::zero(),
            UniPoly::zero(),
            ratio.den().clone(),
        )?;
        return Ok(MuVerdict {
            case: CaseTag::Case1,
            mu: Some(mu),
            normal_form: Some(g),
            witnesses: Some(Witnesses::Roots { delta, ratio }),
        });
    }

    let half = QuadScalar::from_rational(crate::Rational::new(1.into(), 2.into()));
    let p = tr.scale(&half);
    let fp = &p * &p - det;
    let omega = poly_gcd(&p, &fp)?;
    let p_f = p.exact_div(&omega).expect("gcd divides");
    let s_f = fp.exact_div(&omega).expect("gcd divides");
    let (d_omega, d_p, d_s) = (omega.deg0(), p_f.deg0(), s_f.deg0());
    let g = QuadMap::fiberwise(FiberMatrix::new(
        p.clone(),
        fp.clone(),
        UniPoly::one(),
        p.clone(),
    )?);

    let coprime = |a: &QuadPoly, b: &QuadPoly| -> Result<bool> { Ok(poly_gcd(a, b)?.is_one()) };
    let (case, mu, t_f, power) = if coprime(&omega, &s_f)? {
        (
            CaseTag::Case2a,
            Some(mu_case2a(d_omega, d_p, d_s)),
            None,
            None,
        )
    } else {
        // omega and s_f share a factor, so both are nonconstant here
        let (pb, tb) = s_f.split_power(&omega);
        let (pc, tc) = omega.split_power(&s_f);
        if pb >= 1 && coprime(&tb, &omega)? {
            (
                CaseTag::Case2b,
                Some(mu_case2b(d_omega, d_p, d_s)),
                Some(tb),
                Some(pb),
            )
        } else if pc >= 1 && coprime(&tc, &s_f)? {
            (
                CaseTag::Case2c,
                Some(mu_case2c(d_omega, d_p, d_s)),
                Some(tc),
                Some(pc),
            )
        } else {
            (
                CaseTag::Unresolved,
                mu_oracle(f, kmax, None).ok(),
                None,
                None,
            )
        }
    };
    Ok(MuVerdict {
        case,
        mu,
        normal_form: Some(g),
        witnesses: Some(Witnesses::Gcd {
            omega,
            p_f,
            s_f,
            t_f,
            p: power,
        }),
    })
}

/// The conjugate model `g` of `f` recorded in its verdict.
pub fn normal_form(verdict: &MuVerdict) -> Result<QuadMap> {
    verdict
        .normal_form
        .clone()
        .ok_or_else(|| Error::domain("elliptic maps have no twist normal form"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jonq::plane_degree;
    use crate::{QMap, QPoly};

    fn p(cs: &[i64]) -> QPoly {
        QPoly::from_i64s(cs)
    }

    fn j0(a: QPoly, b: QPoly, c: QPoly, d: QPoly) -> QMap {
        QMap::from_entries(a, b, c, d).unwrap()
    }

    fn check(f: &QMap, case: CaseTag, mu: u64) -> MuVerdict {
        let v = classify(f).unwrap();
        assert_eq!((v.case, v.mu), (case, Some(mu)), "{f}");
        assert!(v.witnesses_hold(f), "{f}");
        v
    }

    #[test]
    fn diagonal_example() {
        let f = j0(p(&[0, 1, -1]), QPoly::zero(), QPoly::zero(), p(&[1]));
        let v = check(&f, CaseTag::Case1, 4);
        assert_eq!(normal_form(&v).unwrap(), f.to_quad());
    }

    #[test]
    fn conjugate_to_multiplication_by_y() {
        let f = j0(p(&[0, 1]), p(&[0, -1, 1]), QPoly::zero(), p(&[1]));
        let v = check(&f, CaseTag::Case1, 2);
        let g = normal_form(&v).unwrap();
        assert_eq!(
            g,
            QMap::from_entries(p(&[0, 1]), QPoly::zero(), QPoly::zero(), p(&[1]))
                .unwrap()
                .to_quad()
        );
        assert!(plane_degree(&g) <= plane_degree(&f));
    }

    #[test]
    fn irrational_eigenvalues() {
        // Tr = 4y, det = 4y^2 - 2: Delta = 8, delta = 2 sqrt(2)
        let f = j0(p(&[0, 4]), p(&[-1, 0, 2]), p(&[-2]), QPoly::zero());
        let v = check(&f, CaseTag::Case1, 2);
        assert_eq!(v_mu(&f), 2);
        let g = normal_form(&v).unwrap();
        assert!(g.to_rational().is_none());
        assert!(plane_degree(&g) <= plane_degree(&f));
    }

    fn v_mu(f: &QMap) -> u64 {
        super::super::mu_oracle(f, 24, None).unwrap()
    }

    #[test]
    fn gcd_cases() {
        let f = j0(p(&[0, 0, -1]), p(&[0, 1]), p(&[1]), QPoly::zero());
        let v = check(&f, CaseTag::Case2a, 3);
        assert_eq!(v.gcd_degrees(), Some((1, 1, 3, None, None)));

        let mut b = vec![0; 9];
        b[8] = 2;
        let f = j0(p(&[0, 1]), p(&b), p(&[0, 1]), p(&[1]));
        let v = check(&f, CaseTag::Case2a, 9);
        assert_eq!(v.gcd_degrees().unwrap().0, 0);

        let yy2 = p(&[0, 2, 1]);
        let f = j0(yy2.clone(), p(&[0, 0, 0, 0, 0, 1]), p(&[1]), yy2);
        let v = check(&f, CaseTag::Case2b, 3);
        assert_eq!(v.gcd_degrees(), Some((1, 1, 4, Some(0), Some(4))));
        assert_eq!(normal_form(&v).unwrap(), f.to_quad());

        let a = p(&[0, 1]) * p(&[2, 1]).pow(8);
        let f = j0(a.clone(), p(&[0, 0, 0, 0, 0, 1]), p(&[1]), a);
        check(&f, CaseTag::Case2b, 16);

        let a = p(&[0, 1]) * p(&[1, 1]) * p(&[2, 1]);
        let f = j0(a.clone(), p(&[0, 0, 1]), p(&[2, 1]), a);
        let v = check(&f, CaseTag::Case2c, 3);
        assert_eq!(v.gcd_degrees(), Some((2, 1, 1, Some(1), Some(1))));
    }

    #[test]
    fn elliptic_inputs() {
        check(
            &j0(p(&[2]), QPoly::zero(), QPoly::zero(), p(&[1])),
            CaseTag::Elliptic,
            0,
        );
        check(&QMap::identity(), CaseTag::Elliptic, 0);
        // double root: (x + y^3, y)
        check(
            &j0(p(&[1]), p(&[0, 0, 0, 1]), QPoly::zero(), p(&[1])),
            CaseTag::Elliptic,
            0,
        );
        // involution with zero trace
        check(
            &j0(QPoly::zero(), p(&[1, 0, 3]), p(&[1]), QPoly::zero()),
            CaseTag::Elliptic,
            0,
        );
        let v = classify(&QMap::identity()).unwrap();
        assert!(normal_form(&v).is_err());
    }

    #[test]
    fn unresolved_pattern() {
        // Omega = y(y+1)^2 and S = (y+1)(y+2) share y+1 without a power relation
        let pp = p(&[0, 1]) * p(&[1, 1]).pow(2);
        let ff = p(&[0, 1]) * p(&[1, 1]).pow(3) * p(&[2, 1]);
        let f = j0(pp.clone(), ff, p(&[1]), pp);
        let v = classify(&f).unwrap();
        assert_eq!(v.case, CaseTag::Unresolved);
        assert!(v.witnesses_hold(&f));
        assert_eq!(v.mu, Some(v_mu(&f)));
    }

    #[test]
    fn constant_s_overlap_agrees() {
        for d_omega in 0..6 {
            for d_p in 0..6 {
                assert_eq!(mu_case2a(d_omega, d_p, 0), mu_case2c(d_omega, d_p, 0));
            }
        }
        // Tr/2 = y, det = y^2 - y: F = y, Omega = y, S = 1
        let f = j0(p(&[0, 1]), p(&[0, 1]), p(&[1]), p(&[0, 1]));
        let v = classify(&f).unwrap();
        assert_eq!(v.case, CaseTag::Case2a);
        assert_eq!(v.gcd_degrees().unwrap().2, 0);
        assert_eq!(v.mu, Some(v_mu(&f)));
    }

    #[test]
    fn rejects_base_action() {
        let f = QMap::new(
            FiberMatrix::identity(),
            crate::jonq::Moebius::translation(crate::Rational::from_integer(1.into())),
        );
        assert!(classify(&f).is_err());
    }
}
