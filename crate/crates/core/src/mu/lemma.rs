//! Closed-form `deg(g^k)` for the twist normal form `g = ((P x + F)/(x + P), y)`.
//!
//! Diagnostic only: the values are the max-of-three expressions written in
//! terms of the witness degrees, to be compared with measured degrees.

use crate::error::{Error, Result};

use super::{CaseTag, MuVerdict};

fn max3(a: i64, b: i64, c: i64) -> i64 {
    a.max(b).max(c)
}

pub fn lemma_degree_formula(verdict: &MuVerdict, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::domain("closed-form degree needs k >= 1"));
    }
    let Some((d_omega, d_p, d_s, d_t, p)) = verdict.gcd_degrees() else {
        return Err(Error::domain(format!(
            "no closed-form degree for a {} verdict",
            verdict.case
        )));
    };
    let (o, dp, s) = (d_omega as i64, d_p as i64, d_s as i64);
    let l = (k / 2) as i64;
    let even = k.is_multiple_of(2);
    let small = s <= o + 2 * dp;
    let v = match verdict.case {
        CaseTag::Case2a => match (even, small) {
            (true, true) => max3(
                l * (o + 2 * dp) + 1,
                s + l * o + (2 * l - 1) * dp,
                (l - 1) * o + (2 * l - 1) * dp + 2,
            ),
            (true, false) => max3(l * s + 1, o + dp + l * s, dp + (l - 1) * s + 2),
            (false, true) => max3(
                (l + 1) * o + (2 * l + 1) * dp + 1,
                (l + 1) * o + 2 * l * dp + s,
                l * (o + 2 * dp) + 2,
            ),
            (false, false) => max3(l * s + dp + o + 1, (l + 1) * s + o, l * s + 2),
        },
        CaseTag::Case2b => match (even, small) {
            (true, true) => max3(
                2 * l * dp + o + 1,
                (2 * l - 1) * dp + o + s,
                (2 * l - 1) * dp + 1,
            ),
            (true, false) => max3(
                l * s - (l - 1) * o + 1,
                l * s + (2 - l) * o + dp,
                (l - 1) * (s - o) + dp + 1,
            ),
            (false, true) => max3((2 * l + 1) * dp + o + 1, 2 * l * dp + o + s, 2 * l * dp + 1),
            (false, false) => max3(
                l * s - (l - 1) * o + dp + 1,
                (l + 1) * s - (l - 1) * o,
                l * s - l * o + 1,
            ),
        },
        CaseTag::Case2c => {
            let t = d_t.expect("case 2c records T") as i64;
            let p = p.expect("case 2c records p") as i64;
            if even {
                max3(
                    (p * l - l + 1) * s + 2 * l * dp + l * t + 1,
                    (l * (p - 1) + 2) * s + (2 * l - 1) * dp + l * t,
                    (l - 1) * (p - 1) * s + (2 * l - 1) * dp + (l - 1) * t + 2,
                )
            } else {
                max3(
                    (p + l * (p - 1)) * s + (l + 1) * t + (2 * l + 1) * dp + 1,
                    (p + 1 + l * (p - 1)) * s + 2 * l * dp + (l + 1) * t,
                    2 * l * dp + l * t + l * (p - 1) * s + 2,
                )
            }
        }
        _ => {
            return Err(Error::domain(format!(
                "no closed-form degree for a {} verdict",
                verdict.case
            )))
        }
    };
    u64::try_from(v).map_err(|_| Error::Internal(format!("negative closed-form degree {v}")))
}
