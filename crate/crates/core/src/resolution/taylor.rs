//! Upper bounds from the Taylor resolution of a monomial ideal.

use serde::Serialize;

use super::betti::{BettiRing, BettiTable};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{Field, Monomial};

/// Taylor ranks: `C(m, i)` basis elements in homological degree `i`, one per
/// `i`-subset of the minimal generators, in the degree of their lcm.
/// Coordinatewise, these bound the graded Betti numbers of `S/I`.
pub fn taylor_bounds<K: Field>(ideal: &Ideal<K>) -> Result<BettiTable> {
    if !ideal.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let gens = minimal_monomials(ideal);
    let m = gens.len();
    if m > 24 {
        return Err(Error::InvalidArgument(format!(
            "{m} generators: Taylor complex too large to enumerate"
        )));
    }
    let n = ideal.ring().nvars();
    let max_deg = gens.iter().map(|g| g.degree() as i64).sum::<i64>();
    let mut table = BettiTable::new(BettiRing::TaylorBound, m, max_deg + 1);
    table.add(0, 0, 1);
    for mask in 1u32..(1u32 << m) {
        let lcm = (0..m)
            .filter(|&k| mask & (1 << k) != 0)
            .fold(Monomial::one(n), |acc, k| acc.lcm(&gens[k]));
        table.add(mask.count_ones() as usize, lcm.degree() as i64, 1);
    }
    table.set_zero_from(m + 1);
    Ok(table)
}

fn minimal_monomials<K: Field>(ideal: &Ideal<K>) -> Vec<Monomial> {
    let mut gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .filter_map(|g| g.leading_monomial().cloned())
        .collect();
    gens.sort_by_key(Monomial::degree);
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// The six inequalities satisfied by quotients by quadratic monomial ideals,
/// evaluated on a Betti table over `S`. `None` marks an item the table
/// cannot decide (for instance an unknown projective dimension).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticSyzygyBounds {
    /// `t_i <= 2i` for every computed `i`.
    pub t_at_most_2i: bool,
    /// `reg <= pd`.
    pub reg_at_most_pd: Option<bool>,
    /// `t_i < 2i` implies `t_{i+1} < 2(i+1)`.
    pub strict_persists: bool,
    /// `t_i < 2i` for `i > codim`.
    pub strict_beyond_codim: bool,
    /// `beta_i <= C(beta_1, i)`.
    pub betti_binomial: bool,
    /// `pd <= beta_1`.
    pub pd_at_most_beta1: Option<bool>,
}

impl QuadraticSyzygyBounds {
    pub fn all_hold(&self) -> bool {
        self.t_at_most_2i
            && self.reg_at_most_pd != Some(false)
            && self.strict_persists
            && self.strict_beyond_codim
            && self.betti_binomial
            && self.pd_at_most_beta1 != Some(false)
    }
}

/// Evaluates the six inequalities on `table` (over `S`) for a ring of
/// codimension `codim`, over the computed homological range.
pub fn quadratic_syzygy_bounds(table: &BettiTable, codim: usize) -> QuadraticSyzygyBounds {
    let top = table.hom_bound();
    let t = |i: usize| table.t(i);
    let beta1 = table.total(1);
    let strict = |i: usize| t(i).is_none_or(|x| x < 2 * i as i64);
    let pd = table.projective_dimension();
    QuadraticSyzygyBounds {
        t_at_most_2i: (1..=top).all(|i| t(i).is_none_or(|x| x <= 2 * i as i64)),
        reg_at_most_pd: pd.map(|p| table.regularity().unwrap_or(0) <= p as i64),
        strict_persists: (1..top).all(|i| !strict(i) || strict(i + 1)),
        strict_beyond_codim: (codim + 1..=top).all(strict),
        betti_binomial: (1..=top)
            .all(|i| table.total(i) as i128 <= crate::hilbert::binomial(beta1 as usize, i) as i128),
        pd_at_most_beta1: pd.map(|p| p as u64 <= beta1),
    }
}
