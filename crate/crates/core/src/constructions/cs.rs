//! Comparing `T / I_2(t)` with a Borel-fixed monomial ideal of the same
//! `Z^m`-graded Hilbert function.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientRing};
use crate::hilbert::{big_binomial, multigraded_hilbert_function};
use crate::poly::{Monomial, PolynomialRing, Rationals};

/// `T = Q[t_ij]` (`1 <= i <= m`, `1 <= j <= n`, row-major) with
/// `deg t_ij = e_i`.
pub fn cs_ring(m: usize, n: usize) -> Result<PolynomialRing<Rationals>> {
    let names: Vec<String> = (1..=m)
        .flat_map(|i| (1..=n).map(move |j| format!("t{i}_{j}")))
        .collect();
    let grading = (0..m)
        .map(|r| (0..m * n).map(|v| i64::from(v / n == r)).collect())
        .collect();
    Ok(PolynomialRing::new(Rationals, names)?.with_grading(grading)?)
}

/// The 2-minors of the generic `m x n` matrix `(t_ij)`.
pub fn determinantal_ideal(ring: &PolynomialRing<Rationals>, m: usize, n: usize) -> Result<Ideal<Rationals>> {
    let t = |i: usize, j: usize| ring.var(i * n + j);
    let mut minors = Vec::new();
    for i in 0..m {
        for k in i + 1..m {
            for j in 0..n {
                for l in j + 1..n {
                    minors.push(&(&t(i, j) * &t(k, l)) - &(&t(i, l) * &t(k, j)));
                }
            }
        }
    }
    Ideal::new(ring, minors)
}

/// Generators `t_{i1 j1} ... t_{ik jk}` with `i1 < ... < ik` and
/// `j1 + ... + jk >= n + k` (`j` counted from 1).
pub fn cs_monomial_generators(m: usize, n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for rows in 1u32..(1 << m) {
        let rows: Vec<usize> = (0..m).filter(|i| rows >> i & 1 == 1).collect();
        let k = rows.len();
        let mut js = vec![1usize; k];
        loop {
            if js.iter().sum::<usize>() >= n + k {
                let mut e = vec![0u16; m * n];
                for (&i, &j) in rows.iter().zip(&js) {
                    e[i * n + j - 1] = 1;
                }
                out.push(Monomial::new(e));
            }
            // Odometer over {1..n}^k.
            let Some(p) = js.iter().position(|&j| j < n) else { break };
            js[p] += 1;
            js[..p].fill(1);
        }
    }
    out
}

/// Membership in the monomial ideal of [`cs_monomial_generators`]: with
/// `M_i(p)` the largest `j` such that `t_ij` divides `p` (0 if none),
/// `p` lies in the ideal iff `sum over the rows met by p of (M_i(p) - 1)`
/// is at least `n`. On full support this reads `sum M_i(p) >= n + m`.
pub fn cs_membership(p: &Monomial, m: usize, n: usize) -> bool {
    let total: usize = (0..m)
        .filter_map(|i| (0..n).rev().find(|&j| p.exp(i * n + j) > 0))
        .sum();
    total >= n
}

/// One multidegree of the comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsRow {
    pub a: Vec<i64>,
    pub determinantal: u64,
    pub monomial: u64,
    pub formula: u64,
}

impl CsRow {
    pub fn agrees(&self) -> bool {
        self.determinantal == self.monomial && self.monomial == self.formula
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsReport {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<CsRow>,
    pub all_equal: bool,
}

/// Compares, for every `a` in `{0..=box_max}^m`, the dimensions of
/// `(T / I_2(t))_a` and `(T / J)_a` with `C(n - 1 + |a|, n - 1)`.
pub fn cartwright_sturmfels_check(m: usize, n: usize, box_max: i64) -> Result<CsReport> {
    if m == 0 || n == 0 || box_max < 0 {
        return Err(Error::InvalidArgument(format!(
            "need m, n >= 1 and a nonnegative box (got m={m}, n={n}, box={box_max})"
        )));
    }
    let ring = cs_ring(m, n)?;
    let det = QuotientRing::new(determinantal_ideal(&ring, m, n)?)?;
    let mono = QuotientRing::new(Ideal::monomial(&ring, cs_monomial_generators(m, n)))?;
    let mut rows = Vec::new();
    let mut a = vec![0i64; m];
    loop {
        let total: i64 = a.iter().sum();
        let formula = big_binomial(n as u64 - 1 + total as u64, n as u64 - 1);
        rows.push(CsRow {
            a: a.clone(),
            determinantal: multigraded_hilbert_function(&det, &a)?,
            monomial: multigraded_hilbert_function(&mono, &a)?,
            formula: u64::try_from(formula).expect("binomial fits in u64"),
        });
        let Some(p) = a.iter().position(|&x| x < box_max) else { break };
        a[p] += 1;
        a[..p].fill(0);
    }
    let all_equal = rows.iter().all(CsRow::agrees);
    Ok(CsReport { m, n, rows, all_equal })
}
