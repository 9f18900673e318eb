//! The dynamical number of base-points `mu`.
//!
//! [`classify`] evaluates the closed-form classification of twists with
//! trivial base action, [`mu_oracle`] measures the growth of `deg(f^k)`
//! directly, and [`mu`] runs either or both.

mod classify;
mod families;
mod int_iter;
mod lemma;
mod oracle;

pub use classify::{classify, classify_with, normal_form, CaseTag, MuVerdict, Witnesses};
pub use families::{family_f_alpha_beta, family_ft};
pub use lemma::lemma_degree_formula;
pub use oracle::{
    default_stride, degree_sequence, mu_oracle, mu_oracle_with_degrees, DegreeSequence,
};

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::jonq::{plane_degree, JonquieresMap};

/// Iterates inspected by the oracle before its single escalation.
pub const DEFAULT_KMAX: usize = 24;

/// Largest base order searched when reducing to trivial base action.
pub const MOEBIUS_ORDER_MAX: u32 = 12;

/// How [`mu`] obtains its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    Formula,
    Oracle,
    /// Both, failing on disagreement.
    #[default]
    Both,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            _ => Err(Error::domain(format!("unknown method {s:?}"))),
        }
    }
}

/// `mu(f)` for `f` with trivial base action.
pub fn mu<K: Field>(f: &JonquieresMap<K>, method: Method) -> Result<u64> {
    mu_with(f, method, DEFAULT_KMAX)
}

pub fn mu_with<K: Field>(f: &JonquieresMap<K>, method: Method, kmax: usize) -> Result<u64> {
    if !f.is_j0() {
        return Err(Error::domain(
            "mu by classification needs a trivial base action",
        ));
    }
    match method {
        Method::Oracle => mu_oracle(f, kmax, None),
        Method::Formula => classify_with(f, kmax)?.mu_or_err(),
        Method::Both => {
            let verdict = classify_with(f, kmax)?;
            let formula = verdict.mu_or_err()?;
            let oracle = mu_oracle(f, kmax, None)?;
            if formula != oracle {
                return Err(Error::Mismatch {
                    formula,
                    oracle,
                    detail: format!("{verdict:?}"),
                });
            }
            Ok(formula)
        }
    }
}

/// `mu(f^l) / l` where `l` is the order of the base action.
pub fn mu_non_base_wandering<K: Field>(f: &JonquieresMap<K>, method: Method) -> Result<u64> {
    let Some(l) = f.base().order(MOEBIUS_ORDER_MAX) else {
        return Err(Error::domain("base-wandering: no closed form applies"));
    };
    let g = f.iterate(l as u64);
    let m = mu(&g, method)?;
    if m % l as u64 != 0 {
        return Err(Error::Internal(format!(
            "mu(f^{l}) = {m} is not divisible by {l}"
        )));
    }
    Ok(m / l as u64)
}

/// `(k * mu(f), mu(f^k))`, which agree.
pub fn mu_power_check<K: Field>(
    f: &JonquieresMap<K>,
    k: u64,
    method: Method,
) -> Result<(u64, u64)> {
    if k == 0 {
        return Err(Error::domain("power check needs k >= 1"));
    }
    Ok((k * mu(f, method)?, mu(&f.iterate(k), method)?))
}

/// Whether `mu(f) <= 2 deg(f) - 1`. Works for any base action.
pub fn mu_upper_bound_check<K: Field>(f: &JonquieresMap<K>) -> Result<bool> {
    let m = if f.is_j0() {
        mu(f, Method::Formula)?
    } else {
        mu_oracle(f, DEFAULT_KMAX, None)?
    };
    Ok(m < 2 * plane_degree(f))
}
