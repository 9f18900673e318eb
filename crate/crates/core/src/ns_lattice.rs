//! Action of a degree `d` Jonquieres map on the Neron-Severi lattice of the
//! blow-up of its base-points.
//!
//! Basis `(l, e_0, e_1, ..., e_{2d-2})`: the pull-back of a line, the point of
//! multiplicity `d - 1`, then the `2d - 2` simple points. Source and target
//! bases are identified coordinate-wise.

use crate::error::{Error, Result};

/// Lattice vector in the basis above.
pub type NsVector = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsMatrix {
    d: u32,
    /// `columns[j]` is the image of the `j`-th basis vector.
    columns: Vec<NsVector>,
}

impl NsMatrix {
    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[NsVector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.columns[col][row]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| self.columns.iter().map(|c| c[i]).collect())
            .collect()
    }

    pub fn apply(&self, v: &[i64]) -> Result<NsVector> {
        if v.len() != self.rank() {
            return Err(Error::domain(format!(
                "vector of length {} for a rank {} lattice",
                v.len(),
                self.rank()
            )));
        }
        let mut out = vec![0; self.rank()];
        for (c, &x) in self.columns.iter().zip(v) {
            for (o, &m) in out.iter_mut().zip(c) {
                *o += m * x;
            }
        }
        Ok(out)
    }

    /// `M^T J M = J` for the form `J = diag(1, -1, ..., -1)`.
    pub fn preserves_form(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let expected = match (i == j, i) {
                    (false, _) => 0,
                    (true, 0) => 1,
                    (true, _) => -1,
                };
                lorentzian_product(&self.columns[i], &self.columns[j]) == Ok(expected)
            })
        })
    }

    /// Whether `K = (-3, 1, ..., 1)` is mapped to itself.
    pub fn fixes_canonical_class(&self) -> bool {
        let k = canonical_class(self.d);
        self.apply(&k).is_ok_and(|img| img == k)
    }
}

/// `(-3, 1, ..., 1)` of length `2d`.
pub fn canonical_class(d: u32) -> NsVector {
    let mut k = vec![1; 2 * d as usize];
    k[0] = -3;
    k
}

/// Pushforward matrix of a degree `d >= 2` Jonquieres map.
pub fn ns_pushforward(d: u32) -> Result<NsMatrix> {
    if d < 2 {
        return Err(Error::domain("lattice model needs degree d >= 2"));
    }
    let n = 2 * d as usize;
    let di = d as i64;
    let mut columns = Vec::with_capacity(n);

    let mut line = vec![-1; n];
    line[0] = di;
    line[1] = -(di - 1);
    columns.push(line);

    let mut e0 = vec![-1; n];
    e0[0] = di - 1;
    e0[1] = -(di - 2);
    columns.push(e0);

    for i in 2..n {
        let mut ei = vec![0; n];
        ei[0] = 1;
        ei[1] = -1;
        ei[i] = -1;
        columns.push(ei);
    }
    Ok(NsMatrix { d, columns })
}

/// `u_0 v_0 - sum_{i >= 1} u_i v_i`
pub fn lorentzian_product(u: &[i64], v: &[i64]) -> Result<i64> {
    if u.len() != v.len() {
        return Err(Error::domain(format!(
            "lattice vectors of lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    if u.is_empty() {
        return Ok(0);
    }
    let tail: i64 = u[1..].iter().zip(&v[1..]).map(|(a, b)| a * b).sum();
    Ok(u[0] * v[0] - tail)
}

/// The multiplicities of a degree `d` Jonquieres map: `d - 1` once, then
/// `2d - 2` ones.
pub fn jonquieres_profile(d: u32) -> Vec<i64> {
    let mut m = vec![d as i64 - 1];
    m.extend(std::iter::repeat_n(1, 2 * d as usize - 2));
    m
}

/// The Noether equalities and inequality for a homaloidal type.
pub fn homaloidal_check(d: u32, multiplicities: &[i64]) -> bool {
    let d = d as i64;
    let mut m = multiplicities.to_vec();
    m.sort_unstable_by(|a, b| b.cmp(a));
    m.resize(m.len().max(3), 0);
    let sum: i64 = m.iter().sum();
    let squares: i64 = m.iter().map(|x| x * x).sum();
    sum == 3 * (d - 1) && squares == d * d - 1 && m[0] + m[1] + m[2] > d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_columns() {
        let m = ns_pushforward(2).unwrap();
        assert_eq!(
            m.columns(),
            &[
                vec![2, -1, -1, -1],
                vec![1, 0, -1, -1],
                vec![1, -1, -1, 0],
                vec![1, -1, 0, -1]
            ]
        );
        assert!(ns_pushforward(1).is_err());
    }

    #[test]
    fn degree_three_exceptional_column() {
        assert_eq!(
            ns_pushforward(3).unwrap().columns()[1],
            vec![2, -1, -1, -1, -1, -1]
        );
    }

    #[test]
    fn products() {
        let l = vec![1, 0, 0, 0];
        let e1 = vec![0, 0, 1, 0];
        assert_eq!(lorentzian_product(&l, &l), Ok(1));
        assert_eq!(lorentzian_product(&e1, &e1), Ok(-1));
        assert!(lorentzian_product(&l, &[1, 0]).is_err());
        let m = ns_pushforward(4).unwrap();
        assert_eq!(lorentzian_product(&m.columns()[0], &m.columns()[1]), Ok(0));
        for d in 2..=20 {
            let m = ns_pushforward(d).unwrap();
            assert_eq!(lorentzian_product(&m.columns()[0], &m.columns()[0]), Ok(1));
        }
    }

    #[test]
    fn isometry_and_canonical_class() {
        for d in 2..=12 {
            let m = ns_pushforward(d).unwrap();
            assert!(m.preserves_form(), "d = {d}");
            assert!(m.fixes_canonical_class(), "d = {d}");
        }
    }

    #[test]
    fn homaloidal_types() {
        for d in 2..=64 {
            assert!(homaloidal_check(d, &jonquieres_profile(d)));
        }
        assert!(homaloidal_check(5, &[2, 2, 2, 2, 2, 2]));
        assert!(!homaloidal_check(3, &[2, 2, 2]));
        assert!(homaloidal_check(2, &[1, 1, 1]));
        assert!(!homaloidal_check(4, &[3, 3, 3]));
    }
}
