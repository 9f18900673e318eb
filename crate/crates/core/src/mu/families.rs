use crate::arith::UniPoly;
use crate::error::Result;
use crate::jonq::{FiberMatrix, JonquieresMap, Moebius};
use crate::{QMap, Rational};

/// `(y x / (y + 1), y + t)` in fiber-then-base order.
pub fn family_ft(t: Rational) -> QMap {
    JonquieresMap::new(
        FiberMatrix::diagonal(UniPoly::from_i64s(&[0, 1]), UniPoly::from_i64s(&[1, 1]))
            .expect("nonsingular"),
        Moebius::translation(t),
    )
}

/// `((alpha x + y) / (x + 1), beta y)` with `beta` nonzero.
pub fn family_f_alpha_beta(alpha: Rational, beta: Rational) -> Result<QMap> {
    let m = FiberMatrix::new(
        UniPoly::constant(alpha),
        UniPoly::from_i64s(&[0, 1]),
        UniPoly::one(),
        UniPoly::one(),
    )?;
    Ok(JonquieresMap::new(m, Moebius::scaling(beta)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jonq::plane_degree;
    use crate::mu::mu_oracle;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn translation_family() {
        for (t, expected) in [
            (q(0, 1), 2),
            (q(1, 1), 0),
            (q(1, 2), 0),
            (q(1, 3), 0),
            (q(2, 1), 2),
            (q(3, 1), 2),
            (q(5, 2), 2),
        ] {
            assert_eq!(
                mu_oracle(&family_ft(t.clone()), 24, None).unwrap(),
                expected,
                "t = {t}"
            );
        }
        let f = family_ft(q(1, 1));
        for n in 1..8 {
            assert_eq!(plane_degree(&f.iterate(n)), 2);
        }
    }

    #[test]
    fn alpha_beta_family() {
        let f = family_f_alpha_beta(q(2, 1), q(2, 1)).unwrap();
        for n in 0..8u64 {
            assert_eq!(plane_degree(&f.iterate(2 * n)), n + 1);
        }
        assert_eq!(mu_oracle(&f, 24, None).unwrap(), 1);
        assert!(family_f_alpha_beta(q(1, 1), q(0, 1)).is_err());
    }
}
