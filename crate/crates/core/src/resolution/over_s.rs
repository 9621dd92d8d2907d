//! Minimal graded resolutions over the polynomial ring by iterated syzygies.

use super::betti::{BettiRing, BettiTable};
use super::matrix::GradedMatrix;
use super::MinimalResolution;
use crate::error::{Error, Result};
use crate::groebner::{FreeModule, Ideal, ModuleElement, Submodule};
use crate::poly::Field;

fn matrix_of<K: Field>(sub: &Submodule<K>) -> GradedMatrix<K> {
    let ambient = sub.ambient();
    GradedMatrix::new(
        ambient.ring(),
        ambient.shifts().to_vec(),
        sub.degrees(),
        sub.gens().iter().map(|g| g.entries.clone()).collect(),
    )
}

/// A minimal free resolution of `F / U` over the polynomial ring, where
/// `U` is the given submodule, through homological degree `hom_bound` and
/// internal degree `deg_bound`. Degrees use the ring's sugar weights.
///
/// The generators of `U` must lie in `m F`.
pub fn resolution_of_cokernel<K: Field>(
    sub: &Submodule<K>,
    hom_bound: usize,
    deg_bound: i64,
) -> Result<MinimalResolution<K>> {
    let ambient = sub.ambient();
    for g in sub.gens() {
        for e in &g.entries {
            if !e.is_zero() && e.is_constant() {
                return Err(Error::InvalidArgument(
                    "generator has a unit entry; the presentation is not minimal".into(),
                ));
            }
        }
    }
    let mut table = BettiTable::new(BettiRing::Polynomial, hom_bound, deg_bound);
    for &s in ambient.shifts() {
        table.add(0, s, 1);
    }
    let mut maps = Vec::new();
    if hom_bound == 0 {
        return Ok(MinimalResolution { table, maps });
    }
    let mut exact = sub.degrees().iter().all(|&d| d <= deg_bound);
    let mut cur = sub.minimal_generators(Some(deg_bound));
    for i in 1..=hom_bound {
        for d in cur.degrees() {
            table.add(i, d, 1);
        }
        if cur.gens().is_empty() {
            if exact {
                table.set_zero_from(i);
            }
            break;
        }
        maps.push(matrix_of(&cur));
        if i == hom_bound {
            break;
        }
        let (syz, complete) = cur.syzygies_with_status(Some(deg_bound));
        exact = exact && complete && syz.degrees().iter().all(|&d| d <= deg_bound);
        cur = syz.minimal_generators(Some(deg_bound));
    }
    Ok(MinimalResolution { table, maps })
}

/// Minimal resolution of `S/I`.
pub fn resolution_of_quotient<K: Field>(
    ideal: &Ideal<K>,
    hom_bound: usize,
    deg_bound: i64,
) -> Result<MinimalResolution<K>> {
    ideal.require_homogeneous()?;
    let f = FreeModule::new(ideal.ring(), vec![0]);
    let gens = ideal
        .gens()
        .iter()
        .map(|g| ModuleElement { entries: vec![g.clone()] })
        .collect();
    resolution_of_cokernel(&Submodule::new(&f, gens)?, hom_bound, deg_bound)
}

/// Graded Betti numbers `beta^S_{ij}(S/I)`.
pub fn minimal_betti_table_s<K: Field>(ideal: &Ideal<K>, hom_bound: usize, deg_bound: i64) -> Result<BettiTable> {
    Ok(resolution_of_quotient(ideal, hom_bound, deg_bound)?.table)
}
