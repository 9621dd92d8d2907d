//! Veronese submodules `V_u = ⊕_j R_{jc+u}` as modules over `R^(c)`.

use std::collections::HashMap;

use super::subalgebra::{veronese_presentation, SubalgebraPresentation};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::poly::{Field, Monomial, Polynomial, Rationals};
use crate::resolution::RModule;

/// `V_u` presented over the presented Veronese ring `A = T / kernel`:
/// generators are the standard monomials of `R_u` (all in degree 0), and
/// relations are computed through degree `bound`.
#[derive(Clone, Debug)]
pub struct ModulePresentation<K: Field = Rationals> {
    pub base: SubalgebraPresentation<K>,
    pub base_ring: QuotientRing<K>,
    /// Generators of `V_u`, as elements of `R`.
    pub generators: Vec<Polynomial<K>>,
    /// Each relation has one entry (in `T`) per generator.
    pub relations: Vec<Vec<Polynomial<K>>>,
    /// Relations are complete through this degree of `A`.
    pub bound: i64,
}

impl<K: Field> ModulePresentation<K> {
    /// The module, for resolving over `A`.
    pub fn module(&self) -> RModule<K> {
        RModule::Cokernel {
            shifts: vec![0; self.generators.len()],
            relations: self.relations.clone(),
        }
    }

    /// Evaluates every relation in `R`.
    pub fn verify(&self) -> bool {
        let r = self.base.source.ambient();
        self.relations.iter().all(|rel| {
            let total = rel
                .iter()
                .zip(&self.generators)
                .fold(r.zero(), |acc, (a, g)| &acc + &(&a.substitute(r, &self.base.generators) * g));
            self.base.source.is_zero(&total)
        })
    }
}

fn coordinates<K: Field>(f: &Polynomial<K>, index: &HashMap<Monomial, usize>) -> SparseVec<K::Elem> {
    let mut v: SparseVec<K::Elem> = f.terms().iter().map(|(c, m)| (index[m], c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Relations of `V_u` over `R^(c)` by linear algebra in each degree `j`:
/// the kernel of `A_j^{dim R_u} -> R_{jc+u}`, keeping only relations not
/// already produced by multiplying lower ones by the variables of `A`.
pub fn veronese_module_presentation<K: Field>(
    q: &QuotientRing<K>,
    c: u32,
    u: u32,
    bound: i64,
) -> Result<ModulePresentation<K>> {
    if u >= c {
        return Err(Error::InvalidArgument(format!("need 0 <= u < c (got u={u}, c={c})")));
    }
    let base = veronese_presentation(q, c)?;
    let a = base.quotient()?;
    let r = q.ambient();
    let gens: Vec<Polynomial<K>> = q.standard_monomials(u).into_iter().map(|m| r.monomial(m)).collect();
    let m = gens.len();
    let field = r.field().clone();
    let mut relations: Vec<Vec<Polynomial<K>>> = Vec::new();
    let mut lower: Vec<Vec<Polynomial<K>>> = Vec::new();
    for j in 1..=bound.max(0) {
        let a_basis = a.standard_monomials(j as u32);
        let a_index: HashMap<Monomial, usize> = a_basis.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let target_basis = q.standard_monomials(j as u32 * c + u);
        let t_index: HashMap<Monomial, usize> = target_basis.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        // Images of (k, basis monomial) in R_{jc+u}.
        let mut images = Vec::with_capacity(m * a_basis.len());
        for g in &gens {
            for mono in &a_basis {
                let e = a.ambient().monomial(mono.clone()).substitute(r, &base.generators);
                images.push(coordinates(&q.reduce(&(&e * g)), &t_index));
            }
        }
        let rels = kernel(&field, &images);
        // Span of t_v * (relations of degree j - 1), in A_j coordinates.
        let to_vec = |rel: &[Polynomial<K>]| -> SparseVec<K::Elem> {
            let mut out = Vec::new();
            for (k, entry) in rel.iter().enumerate() {
                for (i, c) in coordinates(&a.reduce(entry), &a_index) {
                    out.push((k * a_basis.len() + i, c));
                }
            }
            out.sort_by_key(|(i, _)| *i);
            out
        };
        let mut span = Echelon::new(&field);
        for rel in &lower {
            for v in 0..a.nvars() {
                let x = a.ambient().var(v);
                let shifted: Vec<Polynomial<K>> = rel.iter().map(|e| &x * e).collect();
                span.insert(&to_vec(&shifted));
            }
        }
        let mut all = Vec::new();
        for rel in rels {
            let mut entries: Vec<Vec<(K::Elem, Monomial)>> = vec![Vec::new(); m];
            for (idx, c) in rel {
                entries[idx / a_basis.len()].push((c, a_basis[idx % a_basis.len()].clone()));
            }
            let polys: Vec<Polynomial<K>> = entries.into_iter().map(|t| a.ambient().from_terms(t)).collect();
            if span.insert(&to_vec(&polys)).is_none() {
                relations.push(polys.clone());
            }
            all.push(polys);
        }
        lower = all;
    }
    Ok(ModulePresentation {
        base,
        base_ring: a,
        generators: gens,
        relations,
        bound,
    })
}
