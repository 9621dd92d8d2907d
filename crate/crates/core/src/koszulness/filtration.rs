//! Koszul filtrations and the strongly Koszul property.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, QuotientRing};
use crate::linalg::{rank, SparseVec};
use crate::poly::{Field, Polynomial, Rationals};

/// A named ideal of `R` generated by linear forms.
#[derive(Clone, Debug)]
pub struct FiltrationIdeal<K: Field = Rationals> {
    pub name: String,
    pub gens: Vec<Polynomial<K>>,
}

/// Evidence for one nonzero ideal `I`: `I = J + (x)` and `J : I = C`, with
/// `J` and `C` members of the filtration.
#[derive(Clone, Debug)]
pub struct FiltrationWitness<K: Field = Rationals> {
    pub ideal: String,
    pub base: String,
    pub element: Polynomial<K>,
    pub colon: String,
}

#[derive(Clone, Debug)]
pub struct KoszulFiltration<K: Field = Rationals> {
    pub ideals: Vec<FiltrationIdeal<K>>,
    pub witnesses: Vec<FiltrationWitness<K>>,
}

impl<K: Field> KoszulFiltration<K> {
    /// Ideals as `(name, generators)` and witnesses as
    /// `(ideal, base, element, colon)`, all given as text.
    pub fn parse(
        q: &QuotientRing<K>,
        ideals: &[(&str, &[&str])],
        witnesses: &[(&str, &str, &str, &str)],
    ) -> Result<Self> {
        let ring = q.ambient();
        let ideals = ideals
            .iter()
            .map(|(name, gens)| {
                Ok(FiltrationIdeal {
                    name: name.to_string(),
                    gens: ring.parse_all(gens)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let witnesses = witnesses
            .iter()
            .map(|(i, j, x, c)| {
                Ok(FiltrationWitness {
                    ideal: i.to_string(),
                    base: j.to_string(),
                    element: ring.parse(x)?,
                    colon: c.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(KoszulFiltration { ideals, witnesses })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum FiltrationVerdict {
    /// Every condition holds, so `R` is Koszul.
    Verified,
    Failed { ideal: String, reason: String },
}

impl FiltrationVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, FiltrationVerdict::Verified)
    }
}

fn fail(ideal: &str, reason: impl Into<String>) -> FiltrationVerdict {
    FiltrationVerdict::Failed {
        ideal: ideal.to_string(),
        reason: reason.into(),
    }
}

fn is_linear<K: Field>(f: &Polynomial<K>) -> bool {
    f.is_zero() || (f.is_homogeneous() && f.total_degree() == Some(1))
}

/// Checks the filtration conditions: linear generators, presence of `0`
/// and of the maximal ideal, and a valid witness for every nonzero ideal.
pub fn verify_koszul_filtration<K: Field>(q: &QuotientRing<K>, f: &KoszulFiltration<K>) -> Result<FiltrationVerdict> {
    let ring = q.ambient();
    let mut lifted: HashMap<&str, Ideal<K>> = HashMap::new();
    for i in &f.ideals {
        if let Some(g) = i.gens.iter().find(|g| !is_linear(g)) {
            return Ok(fail(&i.name, format!("generator {g} is not a linear form")));
        }
        lifted.insert(i.name.as_str(), q.ideal(i.gens.clone())?);
    }
    let lookup = |name: &str| -> Result<&Ideal<K>> {
        lifted
            .get(name)
            .ok_or_else(|| Error::UnknownFiltrationIdeal(name.to_string()))
    };
    for w in &f.witnesses {
        lookup(&w.ideal)?;
        lookup(&w.base)?;
        lookup(&w.colon)?;
    }
    let zero = Ideal::zero(ring);
    let maximal = Ideal::of_variables(ring, &(0..ring.nvars()).collect::<Vec<_>>());
    let mut has_zero = false;
    let mut has_max = false;
    let mut nonzero = Vec::new();
    for i in &f.ideals {
        let lift = &lifted[i.name.as_str()];
        if q.ideal_equal(lift, &zero)? {
            has_zero = true;
        } else {
            nonzero.push(i.name.as_str());
        }
        if q.ideal_equal(lift, &maximal)? {
            has_max = true;
        }
    }
    if !has_zero {
        return Ok(fail("0", "the zero ideal is missing"));
    }
    if !has_max {
        return Ok(fail("m", "the maximal ideal is missing"));
    }
    for name in nonzero {
        let Some(w) = f.witnesses.iter().find(|w| w.ideal == name) else {
            return Ok(fail(name, "no witness"));
        };
        if !is_linear(&w.element) {
            return Ok(fail(name, format!("{} is not a linear form", w.element)));
        }
        let i = lookup(&w.ideal)?;
        let j = lookup(&w.base)?;
        let stepped = j.sum(&Ideal::new(ring, vec![w.element.clone()])?)?;
        if !q.ideal_equal(i, &stepped)? {
            return Ok(fail(name, format!("{name} != {} + ({})", w.base, w.element)));
        }
        let colon = q.colon(j, i)?;
        if !q.ideal_equal(&colon, lookup(&w.colon)?)? {
            return Ok(fail(name, format!("{} : {name} != {}", w.base, w.colon)));
        }
    }
    Ok(FiltrationVerdict::Verified)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum StronglyKoszulOutcome {
    Verified,
    /// `(Y) : x` is not generated by elements of the basis.
    Counterexample { y: Vec<String>, x: String },
}

fn linear_coordinates<K: Field>(f: &Polynomial<K>) -> SparseVec<K::Elem> {
    let mut v: SparseVec<K::Elem> = f
        .terms()
        .iter()
        .map(|(c, m)| (m.support().next().expect("linear"), c.clone()))
        .collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Exhaustive check over all `Y ⊆ X` and `x ∈ X \ Y` that `(Y) : x` is
/// generated by the elements of `X` it contains.
pub fn strongly_koszul_check<K: Field>(q: &QuotientRing<K>, basis: &[Polynomial<K>]) -> Result<StronglyKoszulOutcome> {
    let ring = q.ambient();
    let n = ring.nvars();
    if basis.len() != n
        || n > 20
        || !basis.iter().all(|f| !f.is_zero() && is_linear(f))
        || rank(ring.field(), &basis.iter().map(linear_coordinates).collect::<Vec<_>>()) != n
    {
        return Err(Error::NotABasis);
    }
    let member = |mask: u32| -> Vec<Polynomial<K>> {
        (0..n).filter(|&k| mask & (1 << k) != 0).map(|k| basis[k].clone()).collect()
    };
    for mask in 0u32..(1u32 << n) {
        let y = q.ideal(member(mask))?;
        for x in (0..n).filter(|&k| mask & (1 << k) == 0) {
            let colon = q.colon(&y, &Ideal::new(ring, vec![basis[x].clone()])?)?;
            let gb = colon.groebner_basis();
            let z: Vec<Polynomial<K>> = basis.iter().filter(|b| gb.contains(b)).cloned().collect();
            if !q.ideal_equal(&colon, &q.ideal(z)?)? {
                return Ok(StronglyKoszulOutcome::Counterexample {
                    y: member(mask).iter().map(|f| f.to_string()).collect(),
                    x: basis[x].to_string(),
                });
            }
        }
    }
    Ok(StronglyKoszulOutcome::Verified)
}
