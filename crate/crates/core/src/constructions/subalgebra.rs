//! Presentations of subalgebras generated by homogeneous elements.

use crate::error::{Error, Result};
use crate::groebner::{kernel_of_map, Ideal, QuotientRing};
use crate::hilbert::monomials_of_multidegree;
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, PolynomialRing, Rationals};

/// The subalgebra `K[g_1, ..., g_k]` of a quotient `R`, presented as
/// `K[t_1, ..., t_k] / kernel` with `t_j -> g_j`. The presentation ring is
/// standard graded.
#[derive(Clone, Debug)]
pub struct SubalgebraPresentation<K: Field = Rationals> {
    pub source: QuotientRing<K>,
    pub generators: Vec<Polynomial<K>>,
    pub ring: PolynomialRing<K>,
    pub kernel: Ideal<K>,
}

/// Names `t1, t2, ...`, switching prefix while any collides with `avoid`.
pub(crate) fn fresh_names(k: usize, avoid: &[String]) -> Vec<String> {
    names_with_prefixes(&["t", "u", "w", "v", "z"], k, avoid)
}

pub(crate) fn names_with_prefixes(prefixes: &[&str], k: usize, avoid: &[String]) -> Vec<String> {
    for prefix in prefixes {
        let names: Vec<String> = (1..=k).map(|i| format!("{prefix}{i}")).collect();
        if !names.iter().any(|n| avoid.contains(n)) {
            return names;
        }
    }
    (1..=k).map(|i| format!("gen_{i}")).collect()
}

impl<K: Field> SubalgebraPresentation<K> {
    /// Presents the subalgebra of `source` generated by `generators`,
    /// which must be nonzero, homogeneous and of one common degree.
    pub fn new(source: &QuotientRing<K>, generators: Vec<Polynomial<K>>) -> Result<Self> {
        let degrees: Vec<u32> = generators.iter().filter_map(Polynomial::total_degree).collect();
        if degrees.len() != generators.len() || degrees.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::InvalidArgument(
                "generators must be nonzero forms of one common degree".into(),
            ));
        }
        let names = fresh_names(generators.len(), source.ambient().names());
        let kernel = kernel_of_map(&generators, source.defining_ideal().gens(), &names, None)?;
        Ok(SubalgebraPresentation {
            source: source.clone(),
            ring: kernel.ring().clone(),
            generators,
            kernel,
        })
    }

    /// The presented algebra `K[t] / kernel`.
    pub fn quotient(&self) -> Result<QuotientRing<K>> {
        QuotientRing::new(self.kernel.clone())
    }

    /// Whether every kernel generator vanishes on the generators in `R`.
    pub fn verify(&self) -> bool {
        self.kernel.gens().iter().all(|g| {
            let image = g.substitute(self.source.ambient(), &self.generators);
            self.source.is_zero(&image)
        })
    }

    /// Degrees of a minimal generating set of the kernel, increasing.
    pub fn kernel_degrees(&self) -> Result<Vec<u32>> {
        let mut d: Vec<u32> = self
            .kernel
            .minimal_generators()?
            .iter()
            .filter_map(Polynomial::total_degree)
            .collect();
        d.sort_unstable();
        Ok(d)
    }
}

fn as_polynomials<K: Field>(ring: &PolynomialRing<K>, monos: Vec<Monomial>) -> Vec<Polynomial<K>> {
    monos.into_iter().map(|m| ring.monomial(m)).collect()
}

/// `R^(c)`, generated by the standard monomials of degree `c`.
pub fn veronese_presentation<K: Field>(q: &QuotientRing<K>, c: u32) -> Result<SubalgebraPresentation<K>> {
    if c == 0 {
        return Err(Error::InvalidArgument("Veronese degree must be positive".into()));
    }
    if !q.ambient().is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    let gens = as_polynomials(q.ambient(), q.standard_monomials(c));
    SubalgebraPresentation::new(q, gens)
}

/// Monomials of degree `d` in `n` variables supported on at most `s`
/// variables, decreasing in degrevlex.
pub fn pinched_veronese_monomials(n: usize, d: u32, s: usize) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = crate::groebner::monomials_of_degree(n, d)
        .into_iter()
        .filter(|m| m.support().count() <= s)
        .collect();
    out.sort_by(|a, b| MonomialOrder::DegRevLex.compare(b, a));
    out
}

/// `PV(n, d, s)` inside `K[x1, ..., xn]`.
pub fn pinched_veronese(n: usize, d: u32, s: usize) -> Result<SubalgebraPresentation<Rationals>> {
    if n == 0 || d == 0 || s == 0 || s > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= s <= n and d >= 1 (got n={n}, d={d}, s={s})"
        )));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = PolynomialRing::new(Rationals, names)?;
    let q = QuotientRing::polynomial_ring(&ring);
    let gens = as_polynomials(&ring, pinched_veronese_monomials(n, d, s));
    SubalgebraPresentation::new(&q, gens)
}

/// The diagonal subalgebra `⊕_i R_(i c1, i c2)` of a bigraded quotient.
pub fn diagonal_subalgebra<K: Field>(q: &QuotientRing<K>, c1: i64, c2: i64) -> Result<SubalgebraPresentation<K>> {
    if q.ambient().grading_rank() != 2 {
        return Err(Error::GradingRows(2));
    }
    if c1 < 0 || c2 < 0 || c1 + c2 == 0 {
        return Err(Error::InvalidArgument(format!("diagonal ({c1},{c2}) must be nonzero and nonnegative")));
    }
    let lead = q.initial_monomials();
    let mut monos: Vec<Monomial> = monomials_of_multidegree(q.ambient(), &[c1, c2])?
        .into_iter()
        .filter(|m| !lead.iter().any(|l| l.divides(m)))
        .collect();
    let ring = q.ambient();
    monos.sort_by(|a, b| ring.compare(b, a));
    if monos.is_empty() {
        return Err(Error::InvalidArgument(format!("R_({c1},{c2}) is zero")));
    }
    SubalgebraPresentation::new(q, as_polynomials(ring, monos))
}
