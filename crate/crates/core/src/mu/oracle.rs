//! Degree-growth measurement of `mu`: `mu(f) = 2 lim deg(f^k) / k`.

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::jonq::{plane_degree, JonquieresMap};

use super::int_iter::IntMap;
use super::MOEBIUS_ORDER_MAX;

/// Trailing differences that must agree within each residue class.
const WINDOW: usize = 3;

/// Multiples of the base stride tried in turn. Cancellations at points where
/// the eigenvalue ratio is a root of unity of order 3, 4 or 6 make the degree
/// sequence periodic with a longer period than the base stride.
const STRIDE_MULTIPLES: [usize; 6] = [1, 2, 3, 4, 6, 12];

/// Exact degrees of `f^1, ..., f^kmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    /// `degrees[k - 1] = deg(f^k)`
    pub degrees: Vec<u64>,
    pub stride: usize,
    /// Common value of `deg(f^(k + stride)) - deg(f^k)` once it has settled.
    pub slope_numerator: Option<u64>,
}

impl DegreeSequence {
    /// `mu` read off the settled slope.
    pub fn mu(&self) -> Option<u64> {
        self.slope_numerator
            .filter(|d| (2 * d) % self.stride as u64 == 0)
            .map(|d| 2 * d / self.stride as u64)
    }
}

/// 2 for trivial base action, `2 l` for a base of finite order `l`, else 2.
pub fn default_stride<K: Field>(f: &JonquieresMap<K>) -> usize {
    match f.base().order(MOEBIUS_ORDER_MAX) {
        Some(l) => 2 * l as usize,
        None => 2,
    }
}

#[allow(clippy::large_enum_variant)]
enum Chain<K> {
    Generic {
        f: JonquieresMap<K>,
        current: JonquieresMap<K>,
    },
    Integer {
        f: IntMap,
        current: IntMap,
    },
}

struct Iterates<K> {
    chain: Chain<K>,
    degrees: Vec<u64>,
}

impl<K: Field> Iterates<K> {
    fn new(f: &JonquieresMap<K>) -> Self {
        let chain = match f.to_rational() {
            Some(q) => {
                let fi = IntMap::from_rational(&q);
                Chain::Integer {
                    current: fi.clone(),
                    f: fi,
                }
            }
            None => Chain::Generic {
                f: f.clone(),
                current: f.clone(),
            },
        };
        Iterates {
            chain,
            degrees: Vec::new(),
        }
    }

    fn extend_to(&mut self, kmax: usize) {
        while self.degrees.len() < kmax {
            // `current` holds f^(len + 1)
            let d = match &mut self.chain {
                Chain::Generic { f, current } => {
                    let d = plane_degree(current);
                    *current = current.compose(f);
                    d
                }
                Chain::Integer { f, current } => {
                    let d = current.plane_degree();
                    *current = current.compose(f);
                    d
                }
            };
            self.degrees.push(d);
        }
    }
}

/// First stride among the multiples of `base` along which the sequence
/// settles, with its difference.
fn settle(degrees: &[u64], base: usize) -> Option<(usize, u64)> {
    STRIDE_MULTIPLES
        .iter()
        .map(|m| m * base)
        .take_while(|&s| degrees.len() >= (WINDOW + 1) * s)
        .find_map(|s| settled_difference(degrees, s).map(|d| (s, d)))
}

fn settled_difference(degrees: &[u64], stride: usize) -> Option<u64> {
    let mut common = None;
    for r in 0..stride {
        let class: Vec<i64> = degrees
            .iter()
            .skip(r)
            .step_by(stride)
            .map(|&d| d as i64)
            .collect();
        if class.len() < WINDOW + 1 {
            return None;
        }
        let diffs: Vec<i64> = class.windows(2).map(|w| w[1] - w[0]).collect();
        let tail = &diffs[diffs.len() - WINDOW..];
        if tail.iter().any(|&d| d != tail[0]) || tail[0] < 0 {
            return None;
        }
        match common {
            None => common = Some(tail[0]),
            Some(c) if c != tail[0] => return None,
            _ => {}
        }
    }
    common.map(|c| c as u64)
}

/// No later degree exceeds the largest degree in the first half.
fn bounded(degrees: &[u64]) -> bool {
    let half = degrees.len() / 2;
    let first = degrees[..half].iter().max();
    let second = degrees[half..].iter().max();
    matches!((first, second), (Some(a), Some(b)) if b <= a)
}

pub fn degree_sequence<K: Field>(f: &JonquieresMap<K>, kmax: usize) -> DegreeSequence {
    let mut it = Iterates::new(f);
    it.extend_to(kmax);
    let base = default_stride(f);
    let (stride, slope_numerator) = match settle(&it.degrees, base) {
        Some((s, d)) => (s, Some(d)),
        None => (base, None),
    };
    DegreeSequence {
        degrees: it.degrees,
        stride,
        slope_numerator,
    }
}

/// `mu(f)` from the growth of `deg(f^k)`, `k <= kmax`, with one escalation
/// to `2 kmax` when the differences have not settled. `stride` overrides the
/// base stride; its multiples are still tried.
pub fn mu_oracle<K: Field>(
    f: &JonquieresMap<K>,
    kmax: usize,
    stride: Option<usize>,
) -> Result<u64> {
    mu_oracle_with_degrees(f, kmax, stride).map(|(mu, _)| mu)
}

/// [`mu_oracle`] together with the degrees it computed, `kmax` or `2 kmax`
/// of them.
pub fn mu_oracle_with_degrees<K: Field>(
    f: &JonquieresMap<K>,
    kmax: usize,
    stride: Option<usize>,
) -> Result<(u64, Vec<u64>)> {
    if kmax < 4 {
        return Err(Error::domain("oracle needs kmax >= 4"));
    }
    let stride = stride.unwrap_or_else(|| default_stride(f));
    if stride == 0 {
        return Err(Error::domain("oracle stride must be positive"));
    }
    let mut it = Iterates::new(f);
    for limit in [kmax, 2 * kmax] {
        it.extend_to(limit);
        if let Some((stride, d)) = settle(&it.degrees, stride) {
            if (2 * d) % stride as u64 != 0 {
                return Err(Error::Internal(format!(
                    "degree slope {d} per {stride} iterates gives a non-integral mu"
                )));
            }
            return Ok((2 * d / stride as u64, it.degrees));
        }
        if bounded(&it.degrees) {
            return Ok((0, it.degrees));
        }
    }
    Err(Error::NotStabilized {
        kmax: 2 * kmax,
        degrees: it.degrees,
    })
}
