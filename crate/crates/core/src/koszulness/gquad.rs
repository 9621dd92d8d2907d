//! Searching for coordinates and orders with a quadratic Groebner basis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::groebner::{truncated_groebner_basis, Ideal, QuotientRing};
use crate::linalg::{rank, SparseVec};
use crate::poly::{Field, MonomialOrder, Polynomial};

/// How much of the space of orders and coordinates to try.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GQuadBudget {
    /// Number of seeded random integer coordinate changes, each tried
    /// with degrevlex and lex.
    pub random_changes: usize,
    pub seed: u64,
    /// Entries of random changes are drawn from `-max_entry..=max_entry`.
    pub max_entry: i64,
}

impl Default for GQuadBudget {
    fn default() -> Self {
        GQuadBudget {
            random_changes: 200,
            seed: 0,
            max_entry: 2,
        }
    }
}

/// Coordinates and an order under which the defining ideal has a Groebner
/// basis of quadrics: substitute `x_i -> sum_j change[i][j] x_j`, then take
/// the initial ideal under `order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GQuadCertificate {
    pub label: String,
    #[serde(serialize_with = "order_string")]
    pub order: MonomialOrder,
    pub change: Vec<Vec<i64>>,
    /// Generators of the initial ideal in the new coordinates.
    pub initial_ideal: Vec<String>,
}

fn order_string<S: serde::Serializer>(o: &MonomialOrder, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&o.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GQuadOutcome {
    /// Re-verifiable with [`verify_g_quadratic`].
    Found(GQuadCertificate),
    /// Nothing found within the budget; this does not show that the ring
    /// is not G-quadratic.
    NotFound { attempts: usize },
    /// The ring is not quadratic, so no search was made.
    NotQuadratic,
}

fn permutation_matrix(perm: &[usize]) -> Vec<Vec<i64>> {
    let n = perm.len();
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(perm[i] == j)).collect())
        .collect()
}

/// The standard attempts: lex, deglex and degrevlex in the given
/// coordinates and with reversed and rotated variable precedence.
fn standard_attempts(n: usize) -> Vec<(MonomialOrder, Vec<usize>, &'static str)> {
    let id: Vec<usize> = (0..n).collect();
    let rev: Vec<usize> = (0..n).rev().collect();
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n.max(1)).collect();
    vec![
        (MonomialOrder::DegRevLex, id.clone(), "given"),
        (MonomialOrder::DegLex, id.clone(), "given"),
        (MonomialOrder::Lex, id, "given"),
        (MonomialOrder::DegRevLex, rev.clone(), "reversed"),
        (MonomialOrder::DegLex, rev.clone(), "reversed"),
        (MonomialOrder::Lex, rev, "reversed"),
        (MonomialOrder::DegRevLex, rot.clone(), "rotated"),
        (MonomialOrder::Lex, rot, "rotated"),
    ]
}

fn transformed_ideal<K: Field>(
    q: &QuotientRing<K>,
    order: &MonomialOrder,
    change: &[Vec<i64>],
) -> Result<Ideal<K>> {
    let ring = q.ambient().with_order(order.clone())?;
    let field = ring.field().clone();
    let images: Vec<Polynomial<K>> = change
        .iter()
        .map(|row| {
            ring.from_terms(
                row.iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(j, &a)| (field.from_i64(a), crate::poly::Monomial::var(row.len(), j, 1)))
                    .collect(),
            )
        })
        .collect();
    let gens = q
        .defining_ideal()
        .gens()
        .iter()
        .map(|g| g.substitute(&ring, &images))
        .collect();
    Ideal::new(&ring, gens)
}

/// The initial ideal's generators if the basis is quadratic.
fn quadratic_initial_ideal<K: Field>(ideal: &Ideal<K>) -> Result<Option<Vec<String>>> {
    // Cheap rejection: a cubic in the basis already shows up at degree 3.
    let partial = truncated_groebner_basis(ideal, 3)?;
    if partial.elements().iter().any(|g| g.total_degree() != Some(2)) {
        return Ok(None);
    }
    let gb = ideal.groebner_basis();
    if gb.elements().iter().all(|g| g.total_degree() == Some(2)) {
        let ring = ideal.ring();
        Ok(Some(gb.leading_monomials().into_iter().map(|m| ring.monomial(m).to_string()).collect()))
    } else {
        Ok(None)
    }
}

fn attempt<K: Field>(
    q: &QuotientRing<K>,
    order: &MonomialOrder,
    change: Vec<Vec<i64>>,
    label: String,
) -> Result<Option<GQuadCertificate>> {
    let ideal = transformed_ideal(q, order, &change)?;
    Ok(quadratic_initial_ideal(&ideal)?.map(|initial_ideal| GQuadCertificate {
        label,
        order: order.clone(),
        change,
        initial_ideal,
    }))
}

fn invertible(m: &[Vec<i64>]) -> bool {
    let k = crate::poly::Rationals;
    let rows: Vec<SparseVec<_>> = m
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(j, &a)| (j, num_rational::BigRational::from_integer(a.into())))
                .collect()
        })
        .collect();
    rank(&k, &rows) == m.len()
}

/// Tries the eight standard attempts, then `budget.random_changes` seeded
/// random coordinate changes. Requires a quadratic ring (otherwise
/// returns `NotQuadratic` at once).
pub fn g_quadratic_search<K: Field>(q: &QuotientRing<K>, budget: &GQuadBudget) -> Result<GQuadOutcome> {
    if !super::is_quadratic(q)?.quadratic {
        return Ok(GQuadOutcome::NotQuadratic);
    }
    let n = q.nvars();
    let names = q.ambient().names();
    let mut attempts = 0;
    for (order, perm, how) in standard_attempts(n) {
        attempts += 1;
        // Slot k holds the variable sent there, so precedence follows the
        // inverse permutation.
        let mut precedence = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            precedence[p] = i;
        }
        let shown: Vec<&str> = precedence.iter().map(|&i| names[i].as_str()).collect();
        let label = format!("{order}, {how} variables {}", shown.join(">"));
        if let Some(cert) = attempt(q, &order, permutation_matrix(&perm), label)? {
            return Ok(GQuadOutcome::Found(cert));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let e = budget.max_entry.max(1);
    for k in 0..budget.random_changes {
        let change = loop {
            let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-e..=e)).collect()).collect();
            if invertible(&m) {
                break m;
            }
        };
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            attempts += 1;
            let label = format!("{order}, random change {} (seed {})", k + 1, budget.seed);
            if let Some(cert) = attempt(q, &order, change.clone(), label)? {
                return Ok(GQuadOutcome::Found(cert));
            }
        }
    }
    Ok(GQuadOutcome::NotFound { attempts })
}

/// Recomputes the Groebner basis under the certificate and checks that it
/// consists of quadrics.
pub fn verify_g_quadratic<K: Field>(q: &QuotientRing<K>, cert: &GQuadCertificate) -> Result<bool> {
    if !invertible(&cert.change) {
        return Ok(false);
    }
    let ideal = transformed_ideal(q, &cert.order, &cert.change)?;
    Ok(quadratic_initial_ideal(&ideal)?.is_some())
}
