//! Hilbert series numerators of monomial ideals by pivot recursion.

use std::collections::HashMap;

use super::series::{poly_mul, HilbertSeries};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::poly::{Field, Monomial};

/// Numerator `N` with `H(S/I) = N(z) / (1 - z)^n`, for the monomial ideal
/// `I` generated by `gens` in `n` variables (standard grading).
pub fn monomial_numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens: Vec<Vec<u16>> = gens.iter().map(|m| m.exps().to_vec()).collect();
    let mut memo = HashMap::new();
    numerator(gens, &mut memo)
}

type Memo = HashMap<Vec<Vec<u16>>, Vec<i64>>;

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Minimal generators, sorted (canonical key for the memo table).
fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_by_key(|g| g.iter().map(|&e| e as u32).sum::<u32>());
    let mut out: Vec<Vec<u16>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn degree(g: &[u16]) -> usize {
    g.iter().map(|&e| e as usize).sum()
}

fn one_minus_z_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d + 1];
    v[0] = 1;
    v[d] -= 1;
    v
}

fn add_into(acc: &mut Vec<i64>, other: &[i64], shift: usize) {
    if acc.len() < other.len() + shift {
        acc.resize(other.len() + shift, 0);
    }
    for (i, &c) in other.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn numerator(gens: Vec<Vec<u16>>, memo: &mut Memo) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| degree(g) == 0) {
        return Vec::new();
    }
    let n = gens[0].len();
    // Variables occurring in more than one generator.
    let mut counts = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (pivot, &best) = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, &c)| (c, std::cmp::Reverse(*i)))
        .expect("nonempty");
    if best <= 1 {
        // Pairwise coprime generators: a complete intersection.
        return gens
            .iter()
            .fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_z_pow(degree(g))));
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    // N(I) = N(I + (x)) + z N(I : x), and I + (x) splits off the factor
    // (1 - z) since x is coprime to the generators not divisible by x.
    let without: Vec<Vec<u16>> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pivot] = h[pivot].saturating_sub(1);
            h
        })
        .collect();
    let mut out = poly_mul(&numerator(without, memo), &[1, -1]);
    let c = numerator(colon, memo);
    add_into(&mut out, &c, 1);
    while out.last() == Some(&0) {
        out.pop();
    }
    memo.insert(gens, out.clone());
    out
}

/// Hilbert series of a standard graded quotient, read off the initial
/// ideal of its defining ideal.
pub fn hilbert_series<K: Field>(q: &QuotientRing<K>) -> Result<HilbertSeries> {
    if !q.ambient().is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    let num = monomial_numerator(&q.initial_monomials());
    Ok(HilbertSeries::new(num, q.nvars()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolynomialRing;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn principal_and_ci() {
        assert_eq!(monomial_numerator(&[m(&[2, 0])]), vec![1, 0, -1]);
        assert_eq!(monomial_numerator(&[m(&[1, 0]), m(&[0, 1])]), vec![1, -2, 1]);
        assert_eq!(monomial_numerator(&[]), vec![1]);
    }

    #[test]
    fn xy_in_two_variables() {
        // S/(xy): 1 + 2z + 2z^2 + ..., numerator 1 - z^2 over (1-z)^2.
        assert_eq!(monomial_numerator(&[m(&[1, 1])]), vec![1, 0, -1]);
        let r = PolynomialRing::rationals(&["x", "y"]).unwrap();
        let q = QuotientRing::parse(&r, &["x*y"]).unwrap();
        assert_eq!(hilbert_series(&q).unwrap().to_string(), "(1+z)/(1-z)");
    }

    #[test]
    fn overlapping_generators() {
        // (x^2, xy, y^2): H = 1 + 2z.
        let n = monomial_numerator(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(HilbertSeries::new(n, 2), HilbertSeries::polynomial(vec![1, 2]));
    }
}
