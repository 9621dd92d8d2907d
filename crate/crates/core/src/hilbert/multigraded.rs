//! Pointwise multigraded Hilbert functions.

use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::poly::{Field, Monomial, PolynomialRing};

/// `dim_K R_a` for the multidegree `a` of the ring's grading, counted as
/// standard monomials of the initial ideal of that multidegree.
///
/// The grading must have nonnegative entries so that each graded piece is
/// finite (no column is zero by construction of the ring).
pub fn multigraded_hilbert_function<K: Field>(q: &QuotientRing<K>, a: &[i64]) -> Result<u64> {
    let lead = q.initial_monomials();
    Ok(monomials_of_multidegree(q.ambient(), a)?
        .iter()
        .filter(|m| !lead.iter().any(|l| l.divides(m)))
        .count() as u64)
}

/// All monomials of the ring of multidegree `a`, in lexicographic order of
/// exponent vectors (smallest first). The grading must be nonnegative.
pub fn monomials_of_multidegree<K: Field>(ring: &PolynomialRing<K>, a: &[i64]) -> Result<Vec<Monomial>> {
    let rows = ring.grading();
    if a.len() != rows.len() {
        return Err(Error::GradingRows(rows.len()));
    }
    if rows.iter().flatten().any(|&w| w < 0) {
        return Err(Error::NegativeGrading);
    }
    if a.iter().any(|&x| x < 0) {
        return Ok(Vec::new());
    }
    let n = ring.nvars();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    let mut exps = vec![0u16; n];
    let mut left = a.to_vec();
    let mut out = Vec::new();
    enumerate(&cols, 0, &mut left, &mut exps, &mut |e| out.push(Monomial::new(e.iter().copied())));
    Ok(out)
}

fn enumerate(
    cols: &[Vec<i64>],
    i: usize,
    left: &mut [i64],
    exps: &mut [u16],
    visit: &mut dyn FnMut(&[u16]),
) {
    if i == cols.len() {
        if left.iter().all(|&x| x == 0) {
            visit(exps);
        }
        return;
    }
    let mut e = 0u16;
    loop {
        enumerate(cols, i + 1, left, exps, visit);
        if !left.iter().zip(&cols[i]).all(|(l, c)| l >= c) {
            break;
        }
        for (l, c) in left.iter_mut().zip(&cols[i]) {
            *l -= c;
        }
        e += 1;
        exps[i] = e;
    }
    for (l, c) in left.iter_mut().zip(&cols[i]) {
        *l += c * e as i64;
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigraded_polynomial_ring() {
        let r = PolynomialRing::rationals(&["x0", "x1", "y0", "y1", "y2"])
            .unwrap()
            .with_grading(vec![vec![1, 1, 0, 0, 0], vec![0, 0, 1, 1, 1]])
            .unwrap();
        let q = QuotientRing::polynomial_ring(&r);
        assert_eq!(multigraded_hilbert_function(&q, &[0, 0]).unwrap(), 1);
        assert_eq!(multigraded_hilbert_function(&q, &[1, 1]).unwrap(), 6);
        assert_eq!(multigraded_hilbert_function(&q, &[2, 1]).unwrap(), 9);
        assert!(matches!(
            multigraded_hilbert_function(&q, &[1]),
            Err(Error::GradingRows(2))
        ));
    }

    #[test]
    fn standard_grading_agrees_with_counts() {
        let r = PolynomialRing::rationals(&["x", "y", "z"]).unwrap();
        let q = QuotientRing::parse(&r, &["x*y", "z^2"]).unwrap();
        for d in 0..6 {
            assert_eq!(
                multigraded_hilbert_function(&q, &[d as i64]).unwrap(),
                q.standard_monomials(d).len() as u64
            );
        }
    }
}
