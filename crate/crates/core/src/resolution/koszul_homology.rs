//! Graded pieces of the homology of the Koszul complex on the variables.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::pieces::Pieces;
use crate::groebner::QuotientRing;
use crate::linalg::{rank, SparseVec};
use crate::poly::Field;
use crate::error::{Error, Result};

/// `dim_K H_i(K(m_R))_j` for `j <= deg_bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulHomologySlice {
    pub i: usize,
    pub dims: BTreeMap<i64, u64>,
    pub deg_bound: i64,
    /// Whether every degree in which `H_i` can be nonzero was examined
    /// (known when `R` is Artinian with top degree `s` and `i + s <= deg_bound`).
    pub complete: bool,
}

impl KoszulHomologySlice {
    /// Largest degree with nonzero homology in the examined range.
    pub fn top(&self) -> Option<i64> {
        self.dims.iter().rev().find(|(_, &d)| d > 0).map(|(&j, _)| j)
    }

    pub fn dim(&self, j: i64) -> u64 {
        self.dims.get(&j).copied().unwrap_or(0)
    }
}

fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out: Vec<u64> = (0u64..(1u64 << n)).filter(|m| m.count_ones() as usize == k).collect();
    out.sort();
    out
}

/// Rank of `d_i` in internal degree `j`: `(K_i)_j -> (K_{i-1})_j`.
fn differential_rank<K: Field>(p: &Pieces<K>, i: usize, j: i64) -> usize {
    let n = p.n;
    if i == 0 || i > n || j < i as i64 {
        return 0;
    }
    let src = subsets(n, i);
    let tgt: HashMap<u64, usize> = subsets(n, i - 1).into_iter().enumerate().map(|(a, m)| (m, a)).collect();
    let e = j - i as i64;
    let tdim = p.dim(e + 1);
    let f = p.field();
    let mut columns: Vec<SparseVec<K::Elem>> = Vec::new();
    for s in &src {
        for idx in 0..p.dim(e) {
            let mut acc: BTreeMap<usize, K::Elem> = BTreeMap::new();
            let mut sign_pos = 0;
            for v in 0..n {
                if s & (1 << v) == 0 {
                    continue;
                }
                let block = tgt[&(s & !(1 << v))] * tdim;
                let sign = if sign_pos % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                sign_pos += 1;
                for (t, c) in p.mul_var(e, idx, v) {
                    let term = f.mul(&sign, c);
                    let slot = acc.entry(block + t).or_insert_with(|| f.zero());
                    *slot = f.add(slot, &term);
                }
            }
            columns.push(acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect());
        }
    }
    rank(f, &columns)
}

/// Graded dimensions of `H_i(K(m_R))` for `i <= i_max`, `j <= deg_bound`.
pub fn koszul_homology_dims<K: Field>(
    q: &QuotientRing<K>,
    i_max: usize,
    deg_bound: i64,
) -> Result<Vec<KoszulHomologySlice>> {
    if !q.ambient().is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    if deg_bound < 0 {
        return Err(Error::BoundTooSmall(format!("degree bound {deg_bound}")));
    }
    let mut p = Pieces::new(q);
    p.ensure(deg_bound + 1);
    let n = p.n;
    let top_degree = (0..=deg_bound + 1).rev().find(|&e| p.dim(e) > 0);
    let artinian_top = if p.dim(deg_bound + 1) == 0 { top_degree } else { None };
    let cells: Vec<(usize, i64)> = (0..=i_max + 1)
        .flat_map(|i| (0..=deg_bound).map(move |j| (i, j)))
        .collect();
    let ranks: HashMap<(usize, i64), usize> = cells
        .par_iter()
        .map(|&(i, j)| ((i, j), differential_rank(&p, i, j)))
        .collect();
    let binom = |a: usize, b: usize| -> u64 { crate::hilbert::binomial(a, b) as u64 };
    Ok((0..=i_max)
        .map(|i| {
            let dims = (0..=deg_bound)
                .map(|j| {
                    let e = j - i as i64;
                    let chain = if i > n { 0 } else { binom(n, i) * p.dim(e) as u64 };
                    let d = chain - ranks[&(i, j)] as u64 - ranks[&(i + 1, j)] as u64;
                    (j, d)
                })
                .collect();
            KoszulHomologySlice {
                i,
                dims,
                deg_bound,
                complete: artinian_top.is_some_and(|s| i as i64 + s <= deg_bound),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolynomialRing;

    #[test]
    fn principal_square() {
        let r = PolynomialRing::rationals(&["x"]).unwrap();
        let q = QuotientRing::parse(&r, &["x^2"]).unwrap();
        let h = koszul_homology_dims(&q, 1, 5).unwrap();
        assert_eq!(h[0].dim(0), 1);
        assert_eq!(h[0].top(), Some(0));
        assert_eq!(h[1].top(), Some(2));
        assert_eq!(h[1].dims.values().sum::<u64>(), 1);
        assert!(h[1].complete);
    }

    #[test]
    fn polynomial_ring_is_acyclic() {
        let r = PolynomialRing::rationals(&["x", "y", "z"]).unwrap();
        let q = QuotientRing::polynomial_ring(&r);
        let h = koszul_homology_dims(&q, 3, 6).unwrap();
        assert!(h[1..].iter().all(|s| s.top().is_none()));
        assert!(!h[1].complete);
    }
}
