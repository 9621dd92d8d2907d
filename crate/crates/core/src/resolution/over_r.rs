//! Minimal graded resolutions over a quotient ring, degree by degree.

use super::betti::{BettiRing, BettiTable};
use super::matrix::GradedMatrix;
use super::pieces::Pieces;
use super::MinimalResolution;
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::poly::{Field, Monomial, Polynomial};

/// A finitely generated graded module over `R`.
#[derive(Clone, Debug)]
pub enum RModule<K: Field> {
    /// The residue field `K = R/m`.
    ResidueField,
    /// The cokernel of a map into `⊕ R(-shifts)`; each relation is a
    /// homogeneous vector with one entry per shift.
    Cokernel {
        shifts: Vec<i64>,
        relations: Vec<Vec<Polynomial<K>>>,
    },
}

type Generators<E> = Vec<(i64, SparseVec<E>)>;

/// Minimal generators of the submodule `U` of `F = ⊕ R(-shifts)` whose
/// degree-`j` part is spanned by `R_1 U_{j-1}` and `candidates(j)`.
/// Returns generators with their degrees, through degree `deg_bound`.
fn minimal_generators<K: Field>(
    p: &mut Pieces<K>,
    shifts: &[i64],
    deg_bound: i64,
    mut candidates: impl FnMut(&mut Pieces<K>, i64) -> Vec<SparseVec<K::Elem>>,
) -> Generators<K::Elem> {
    let Some(&start) = shifts.iter().min() else {
        return Vec::new();
    };
    let mut gens = Vec::new();
    let mut prev: Vec<SparseVec<K::Elem>> = Vec::new();
    for j in start..=deg_bound {
        p.ensure(j - start);
        let field = p.field().clone();
        let mut ech = Echelon::new(&field);
        let mut basis = Vec::new();
        for u in &prev {
            for v in 0..p.n {
                let w = p.mul_vec(shifts, j - 1, u, v);
                if ech.insert(&w).is_none() {
                    basis.push(w);
                }
            }
        }
        for c in candidates(p, j) {
            if ech.insert(&c).is_none() {
                basis.push(c.clone());
                gens.push((j, c));
            }
        }
        prev = basis;
    }
    gens
}

/// Degree-by-degree kernel of `φ: ⊕ R(-src) -> ⊕ R(-tgt)`, given the images
/// of the basis vectors.
struct KernelStream<E> {
    src: Vec<i64>,
    tgt: Vec<i64>,
    images: Vec<SparseVec<E>>,
    prev: Vec<SparseVec<E>>,
}

impl<E: Clone> KernelStream<E> {
    fn next<K: Field<Elem = E>>(&mut self, p: &mut Pieces<K>, j: i64) -> Vec<SparseVec<E>> {
        let offs_prev = p.offsets(&self.src, j - 1);
        let mut cur = Vec::new();
        for (k, &s) in self.src.iter().enumerate() {
            let e = j - s;
            if e < 0 {
                continue;
            }
            if e == 0 {
                cur.push(self.images[k].clone());
                continue;
            }
            for m in p.basis(e).to_vec() {
                let v = m.support().next().expect("positive degree");
                let mut exps = m.exps().to_vec();
                exps[v] -= 1;
                let lower = Monomial::new(exps);
                let idx = p.index_of(e - 1, &lower);
                let before = &self.prev[offs_prev[k] + idx];
                cur.push(p.mul_vec(&self.tgt, j - 1, before, v));
            }
        }
        let field = p.field().clone();
        let ker = kernel(&field, &cur);
        self.prev = cur;
        ker
    }
}

/// A minimal free resolution of `M` over `R`, through homological degree
/// `hom_bound` and internal degree `deg_bound`.
pub fn resolution_over_quotient<K: Field>(
    q: &QuotientRing<K>,
    module: &RModule<K>,
    hom_bound: usize,
    deg_bound: i64,
) -> Result<MinimalResolution<K>> {
    if !q.ambient().is_standard_graded() {
        return Err(Error::NonStandardGrading);
    }
    if deg_bound < 1 {
        return Err(Error::BoundTooSmall(format!(
            "degree bound {deg_bound} certifies no entry"
        )));
    }
    let ring = q.ambient().clone();
    let mut p = Pieces::new(q);
    let (f0, rel_polys): (Vec<i64>, Vec<Vec<Polynomial<K>>>) = match module {
        RModule::ResidueField => (vec![0], (0..q.nvars()).map(|v| vec![ring.var(v)]).collect()),
        RModule::Cokernel { shifts, relations } => (shifts.clone(), relations.clone()),
    };
    // Degrees of the relations, with the minimality requirement.
    let mut rels: Vec<(i64, Vec<Polynomial<K>>)> = Vec::new();
    for r in &rel_polys {
        if r.len() != f0.len() {
            return Err(Error::InvalidArgument(format!(
                "relation has {} entries, expected {}",
                r.len(),
                f0.len()
            )));
        }
        let reduced: Vec<Polynomial<K>> = r.iter().map(|e| q.reduce(e)).collect();
        let mut deg = None;
        for (e, &s) in reduced.iter().zip(&f0) {
            if e.is_zero() {
                continue;
            }
            if !e.is_homogeneous() {
                return Err(Error::Inhomogeneous(e.to_string()));
            }
            let d = e.sugar() + s;
            if deg.is_some_and(|x| x != d) {
                return Err(Error::Inhomogeneous(format!("relation mixes degrees {} and {d}", deg.unwrap())));
            }
            if e.is_constant() {
                return Err(Error::InvalidArgument(
                    "relation has a unit entry; the presentation is not minimal".into(),
                ));
            }
            deg = Some(d);
        }
        if let Some(d) = deg {
            rels.push((d, reduced));
        }
    }

    let mut table = BettiTable::new(BettiRing::Quotient, hom_bound, deg_bound);
    for &s in &f0 {
        table.add(0, s, 1);
    }
    let mut maps = Vec::new();
    if hom_bound == 0 {
        return Ok(MinimalResolution { table, maps });
    }

    // First step: minimal generators of the relation module.
    let start = f0.iter().copied().min().unwrap_or(0);
    p.ensure(deg_bound - start + 1);
    let f0c = f0.clone();
    let gens = minimal_generators(&mut p, &f0, deg_bound, |p, j| {
        rels.iter()
            .filter(|(d, _)| *d == j)
            .map(|(_, r)| p.from_polynomials(&f0c, j, r))
            .collect()
    });
    let mut src = f0;
    let mut gens = gens;
    for i in 1..=hom_bound {
        let shifts: Vec<i64> = gens.iter().map(|(d, _)| *d).collect();
        for &d in &shifts {
            table.add(i, d, 1);
        }
        let columns = gens.iter().map(|(d, v)| p.to_polynomials(&src, *d, v)).collect();
        maps.push(GradedMatrix::new(&ring, src.clone(), shifts.clone(), columns));
        if gens.is_empty() || i == hom_bound {
            break;
        }
        let mut stream = KernelStream {
            src: shifts.clone(),
            tgt: src.clone(),
            images: gens.iter().map(|(_, v)| v.clone()).collect(),
            prev: Vec::new(),
        };
        let next = minimal_generators(&mut p, &shifts, deg_bound, |p, j| stream.next(p, j));
        src = shifts;
        gens = next;
    }
    Ok(MinimalResolution { table, maps })
}

pub fn betti_table_over_quotient<K: Field>(
    q: &QuotientRing<K>,
    module: &RModule<K>,
    hom_bound: usize,
    deg_bound: i64,
) -> Result<BettiTable> {
    Ok(resolution_over_quotient(q, module, hom_bound, deg_bound)?.table)
}
