//! Rees algebras of complete intersections and lifts of quadratic
//! complete intersections.

use serde::Serialize;

use super::subalgebra::names_with_prefixes;
use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientRing};
use crate::hilbert::{hilbert_series, monomial_numerator, HilbertSeries};
use crate::koszulness::GQuadCertificate;
use crate::poly::{Field, MonomialOrder, Polynomial, PolynomialRing};

const Y_PREFIXES: &[&str] = &["y", "t", "u", "w"];

/// `(1 - z^d)^r`, lowest degree first.
fn ci_numerator(d: usize, r: usize) -> Vec<i64> {
    let mut out = vec![1i64];
    for _ in 0..r {
        let mut next = vec![0i64; out.len() + d];
        for (i, &c) in out.iter().enumerate() {
            next[i] += c;
            next[i + d] -= c;
        }
        out = next;
    }
    out
}

/// Checks that `f` is a homogeneous regular sequence of forms of one
/// standard degree, by comparing `H(S/(f))` with `(1 - z^d)^r / (1 - z)^n`.
/// Returns the common degree.
pub fn check_regular_sequence<K: Field>(f: &[Polynomial<K>]) -> Result<u32> {
    let Some(first) = f.first() else {
        return Err(Error::NotRegularSequence("empty sequence".into()));
    };
    let ring = first.ring();
    if !ring.is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    let degrees: Vec<u32> = f.iter().filter_map(Polynomial::total_degree).collect();
    if degrees.len() != f.len() || degrees.iter().any(|&d| d != degrees[0]) || degrees[0] == 0 {
        return Err(Error::NotRegularSequence(
            "forms must be nonzero of one positive degree".into(),
        ));
    }
    let ideal = Ideal::new(ring, f.to_vec())?;
    ideal.require_homogeneous()?;
    let n = ring.nvars();
    let actual = HilbertSeries::new(monomial_numerator(&ideal.groebner_basis().leading_monomials()), n);
    let expected = HilbertSeries::new(ci_numerator(degrees[0] as usize, f.len()), n);
    if actual != expected {
        return Err(Error::NotRegularSequence(format!(
            "H(S/(f)) = {actual}, expected {expected}"
        )));
    }
    Ok(degrees[0])
}

/// `Rees(f) = S[y_1, ..., y_r] / I_2` for a regular sequence `f` of forms
/// of one degree, where `I_2` is generated by the minors
/// `y_i f_j - y_j f_i`. The ring is bigraded with `deg x = (1, 0)` and
/// `deg y = (0, 1)`.
pub fn rees_ci_presentation<K: Field>(f: &[Polynomial<K>]) -> Result<QuotientRing<K>> {
    check_regular_sequence(f)?;
    let s = f[0].ring();
    let n = s.nvars();
    let r = f.len();
    let mut names = s.names().to_vec();
    names.extend(names_with_prefixes(Y_PREFIXES, r, &names));
    let grading = vec![
        (0..n + r).map(|i| i64::from(i < n)).collect(),
        (0..n + r).map(|i| i64::from(i >= n)).collect(),
    ];
    let ring = PolynomialRing::new(s.field().clone(), names)?.with_grading(grading)?;
    let embed: Vec<usize> = (0..n).collect();
    let lifted: Vec<Polynomial<K>> = f.iter().map(|g| g.relabel(&ring, &embed)).collect();
    let mut minors = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            let yi = ring.var(n + i);
            let yj = ring.var(n + j);
            minors.push(&(&yi * &lifted[j]) - &(&yj * &lifted[i]));
        }
    }
    QuotientRing::new(Ideal::new(&ring, minors)?)
}

/// The lift `A = R[y_1, ..., y_m] / (y_1^2 + q_1, ..., y_m^2 + q_m)` of a
/// complete intersection of quadrics `R = K[x] / (q)`.
#[derive(Clone, Debug, Serialize)]
pub struct CiLift<K: Field = crate::poly::Rationals> {
    #[serde(skip)]
    pub ring: QuotientRing<K>,
    /// Lex order with the `y`s first; its initial ideal is `(y_i^2)`.
    pub certificate: GQuadCertificate,
    pub y_regular: bool,
    pub h_preserved: bool,
    pub h_polynomial: Vec<i64>,
}

/// Builds the lift of `q`, certifies its lex initial ideal and checks by
/// Hilbert series that the `y`s form a regular sequence on it.
pub fn ci_lift<K: Field>(q: &QuotientRing<K>) -> Result<CiLift<K>> {
    let gens = q.defining_ideal().minimal_generators()?;
    let degree = check_regular_sequence(&gens)?;
    if degree != 2 {
        return Err(Error::NotRegularSequence(format!(
            "expected quadrics, got forms of degree {degree}"
        )));
    }
    let s = q.ambient();
    let n = s.nvars();
    let m = gens.len();
    let ys = names_with_prefixes(Y_PREFIXES, m, s.names());
    let names: Vec<String> = ys.into_iter().chain(s.names().iter().cloned()).collect();
    let ring = PolynomialRing::new(s.field().clone(), names)?.with_order(MonomialOrder::Lex)?;
    let shift: Vec<usize> = (m..m + n).collect();
    let lifted: Vec<Polynomial<K>> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| &ring.var(i).pow(2) + &g.relabel(&ring, &shift))
        .collect();
    let a = QuotientRing::new(Ideal::new(&ring, lifted)?)?;
    let mut lead = a.initial_monomials();
    lead.sort_by(|x, y| ring.compare(y, x));
    let squares = (0..m).all(|i| lead.iter().any(|l| *l == crate::poly::Monomial::var(m + n, i, 2)));
    if lead.len() != m || !squares {
        return Err(Error::InvalidArgument("lex initial ideal of the lift is not (y_i^2)".into()));
    }
    let h_a = hilbert_series(&a)?;
    let h_r = hilbert_series(q)?;
    // y regular iff H(A) (1 - z)^m = H(A / (y)) = H(R).
    let y_regular = h_a.denominator_exponent() == h_r.denominator_exponent() + m
        && h_a.numerator() == h_r.numerator();
    let identity: Vec<Vec<i64>> = (0..m + n)
        .map(|i| (0..m + n).map(|j| i64::from(i == j)).collect())
        .collect();
    let certificate = GQuadCertificate {
        label: "lex with lift variables first".into(),
        order: MonomialOrder::Lex,
        change: identity,
        initial_ideal: lead.iter().map(|l| ring.monomial(l.clone()).to_string()).collect(),
    };
    Ok(CiLift {
        ring: a,
        certificate,
        y_regular,
        h_preserved: h_a.h_polynomial() == h_r.h_polynomial(),
        h_polynomial: h_a.h_polynomial().to_vec(),
    })
}
