//! Known example maps and seeded random generators for testing.

use rand::Rng;

use crate::arith::UniPoly;
use crate::jonq::{FiberMatrix, JonquieresMap, Moebius};
use crate::mu::{classify, CaseTag};
use crate::parser::{parse_map, MapSource};
use crate::{QMap, QPoly, Rational};

/// A named map in text form.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub fiber: &'static str,
}

impl Example {
    pub fn map(&self) -> QMap {
        parse_map(&MapSource::new(self.fiber)).expect("example parses")
    }
}

/// Twists with trivial base action whose classification is worked out by hand.
pub const EXAMPLES: [Example; 7] = [
    Example {
        name: "diagonal-quadratic",
        fiber: "[[(1-y)*y, 0],[0, 1]]",
    },
    Example {
        name: "affine-twist",
        fiber: "[[y, y*(y-1)],[0, 1]]",
    },
    Example {
        name: "cubic-bb",
        fiber: "[[-y^2, y],[1, 0]]",
    },
    Example {
        name: "octic-coprime",
        fiber: "[[y, 2*y^8],[y, 1]]",
    },
    Example {
        name: "quintic-omega-power",
        fiber: "[[y*(y+2), y^5],[1, y*(y+2)]]",
    },
    Example {
        name: "nonic-omega-power",
        fiber: "[[y*(y+2)^8, y^5],[1, y*(y+2)^8]]",
    },
    Example {
        name: "cubic-s-power",
        fiber: "[[y*(y+1)*(y+2), y^2],[y+2, y*(y+1)*(y+2)]]",
    },
];

pub fn example(name: &str) -> Option<QMap> {
    EXAMPLES.iter().find(|e| e.name == name).map(Example::map)
}

fn int<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    Rational::from_integer(rng.gen_range(lo..=hi).into())
}

/// Integer coefficients in `[-c, c]`, degree at most `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> QPoly {
    let deg = rng.gen_range(0..=max_deg);
    UniPoly::new((0..=deg).map(|_| int(rng, -c, c)).collect())
}

/// Like [`random_poly`] but monic of exact degree `deg`.
fn random_monic<R: Rng>(rng: &mut R, deg: usize, c: i64) -> QPoly {
    let mut coeffs: Vec<Rational> = (0..deg).map(|_| int(rng, -c, c)).collect();
    coeffs.push(Rational::from_integer(1.into()));
    UniPoly::new(coeffs)
}

fn nonzero_poly<R: Rng>(rng: &mut R, max_deg: usize, c: i64) -> QPoly {
    loop {
        let p = random_poly(rng, max_deg, c);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_moebius<R: Rng>(rng: &mut R) -> Moebius<Rational> {
    loop {
        let e: Vec<Rational> = (0..4).map(|_| int(rng, -3, 3)).collect();
        if let Ok(h) = Moebius::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) {
            return h;
        }
    }
}

/// Random element with trivial base action; entries of degree `<= max_deg`.
pub fn random_j0<R: Rng>(rng: &mut R, max_deg: usize) -> QMap {
    loop {
        let e: Vec<QPoly> = (0..4).map(|_| random_poly(rng, max_deg, 5)).collect();
        if let Ok(f) = QMap::from_entries(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) {
            return f;
        }
    }
}

/// Random element with a random base action.
pub fn random_map<R: Rng>(rng: &mut R, max_deg: usize) -> QMap {
    JonquieresMap::new(random_j0(rng, max_deg).fiber().clone(), random_moebius(rng))
}

/// Conjugate of the fiber matrix by a random constant matrix.
fn scramble<R: Rng>(rng: &mut R, m: FiberMatrix<Rational>) -> QMap {
    loop {
        let e: Vec<QPoly> = (0..4).map(|_| UniPoly::constant(int(rng, -2, 2))).collect();
        if let Ok(s) = FiberMatrix::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()) {
            return JonquieresMap::fiberwise(s.mul(&m).mul(&s.adjugate()));
        }
    }
}

fn twist(p: QPoly, f: QPoly) -> Option<FiberMatrix<Rational>> {
    let det = &(&p * &p) - &f;
    if det.is_zero() {
        return None;
    }
    FiberMatrix::new(p.clone(), f, UniPoly::one(), p).ok()
}

fn candidate<R: Rng>(rng: &mut R, case: CaseTag) -> Option<QMap> {
    const MAX: usize = 6;
    let m = match case {
        CaseTag::Elliptic => {
            let a = nonzero_poly(rng, 4, 5);
            let b = random_poly(rng, MAX, 5);
            match rng.gen_range(0..3) {
                0 => FiberMatrix::new(a.clone(), b, UniPoly::zero(), a).ok()?,
                1 => FiberMatrix::new(
                    UniPoly::zero(),
                    nonzero_poly(rng, MAX, 5),
                    UniPoly::one(),
                    UniPoly::zero(),
                )
                .ok()?,
                _ => FiberMatrix::diagonal(
                    UniPoly::constant(int(rng, 1, 5)),
                    UniPoly::constant(int(rng, 1, 5)),
                )
                .ok()?,
            }
        }
        CaseTag::Case1 => {
            let a = nonzero_poly(rng, MAX, 5);
            let d = nonzero_poly(rng, MAX, 5);
            FiberMatrix::new(a, random_poly(rng, MAX, 5), UniPoly::zero(), d).ok()?
        }
        CaseTag::Case2a => {
            let omega = {
                let deg = rng.gen_range(0..=2);
                random_monic(rng, deg, 3)
            };
            let pf = nonzero_poly(rng, MAX - omega.deg0(), 5);
            let sf = nonzero_poly(rng, MAX - omega.deg0(), 5);
            twist(&omega * &pf, &omega * &sf)?
        }
        CaseTag::Case2b => {
            let omega = {
                let deg = rng.gen_range(1..=2);
                random_monic(rng, deg, 3)
            };
            let pw = rng.gen_range(1..=2);
            let t = nonzero_poly(rng, 2, 5);
            let sf = &omega.pow(pw) * &t;
            if omega.deg0() + sf.deg0() > MAX {
                return None;
            }
            let pf = nonzero_poly(rng, MAX - omega.deg0(), 5);
            twist(&omega * &pf, &omega * &sf)?
        }
        CaseTag::Case2c => {
            let sf = {
                let deg = rng.gen_range(1..=2);
                random_monic(rng, deg, 3)
            };
            let pw = rng.gen_range(1..=2);
            let t = nonzero_poly(rng, 2, 5);
            let omega = &sf.pow(pw) * &t;
            if omega.deg0() + sf.deg0() > MAX || omega.deg0() > MAX {
                return None;
            }
            let pf = nonzero_poly(rng, MAX - omega.deg0(), 5);
            twist(&omega * &pf, &omega * &sf)?
        }
        CaseTag::Unresolved => return None,
    };
    let f = scramble(rng, m);
    let max_deg = f.fiber().max_degree();
    (max_deg <= MAX && classify(&f).ok()?.case == case).then_some(f)
}

/// Random map of the requested classification with entries of degree at
/// most 6 and small integer coefficients. `None` for `Unresolved`, which has
/// no generator.
pub fn random_case_map<R: Rng>(rng: &mut R, case: CaseTag) -> Option<QMap> {
    if case == CaseTag::Unresolved {
        return None;
    }
    loop {
        if let Some(f) = candidate(rng, case) {
            return Some(f);
        }
    }
}
