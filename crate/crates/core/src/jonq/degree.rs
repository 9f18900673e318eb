use crate::arith::{poly_gcd, Field, UniPoly};

use super::JonquieresMap;

/// Binary form `Z^val * p^h(Y, Z)` with `p` a univariate polynomial.
struct Form<K> {
    p: UniPoly<K>,
    val: usize,
}

/// Degree of `f` as a birational map of the projective plane.
///
/// With `x = X/Z`, `y = Y/Z`, the components are
/// `(Num L2 : L1 Den : L2 Den)` of degree `N + 1`, where `Num` and `Den` are
/// linear in `X`. Their common factor is the gcd of the binary-form
/// coefficients of `Num L2` and `Den`: a common factor involving `X` would
/// force `Num/Den` to be independent of `x`, which nonsingularity excludes.
pub fn plane_degree<K: Field>(f: &JonquieresMap<K>) -> u64 {
    let m = f.fiber();
    let deg = |p: &UniPoly<K>| p.degree();
    let n = [
        deg(m.a()).map(|d| d + 1),
        deg(m.b()),
        deg(m.c()).map(|d| d + 1),
        deg(m.d()),
    ]
    .into_iter()
    .flatten()
    .max()
    .expect("nonsingular matrix");

    let [_, _, c, d] = f.base().entries();
    let l2 = if c.is_zero() {
        Form {
            p: UniPoly::constant(d.clone()),
            val: 1,
        }
    } else {
        Form {
            p: UniPoly::linear(c.clone(), d.clone()),
            val: 0,
        }
    };

    // X-coefficient of a form carries one fewer power of Z
    let coeff = |p: &UniPoly<K>, x_linear: bool| {
        p.degree().map(|dp| Form {
            p: p.clone(),
            val: n - dp - usize::from(x_linear),
        })
    };
    let times_l2 = |f: Form<K>| Form {
        p: &f.p * &l2.p,
        val: f.val + l2.val,
    };
    let forms = [
        coeff(m.a(), true).map(times_l2),
        coeff(m.b(), false).map(times_l2),
        coeff(m.c(), true),
        coeff(m.d(), false),
    ];

    let mut g: Option<UniPoly<K>> = None;
    let mut val = usize::MAX;
    for form in forms.into_iter().flatten() {
        val = val.min(form.val);
        g = Some(match g {
            None => form.p.monic(),
            Some(g) if g.is_one() => g,
            Some(g) => poly_gcd(&g, &form.p).expect("nonzero"),
        });
    }
    let common = g.map_or(0, |g| g.deg0()) + val;
    (n + 1 - common) as u64
}

/// Number of proper and infinitely near base-points, `2d - 1` for `d >= 2`.
pub fn base_point_count<K: Field>(f: &JonquieresMap<K>) -> u64 {
    base_points_of_degree(plane_degree(f))
}

/// Base-point count of a Jonquieres map of degree `d`.
pub fn base_points_of_degree(d: u64) -> u64 {
    if d <= 1 {
        0
    } else {
        2 * d - 1
    }
}
