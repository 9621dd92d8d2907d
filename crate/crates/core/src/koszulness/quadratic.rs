use serde::Serialize;

use crate::error::Result;
use crate::groebner::QuotientRing;
use crate::poly::Field;

/// Degrees of a minimal homogeneous generating set of the defining ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticCheck {
    pub quadratic: bool,
    /// Sorted increasingly.
    pub degrees: Vec<u32>,
}

impl QuadraticCheck {
    /// `(degree, count)` pairs.
    pub fn degree_counts(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &d in &self.degrees {
            match out.last_mut() {
                Some((e, c)) if *e == d => *c += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }
}

pub fn is_quadratic<K: Field>(q: &QuotientRing<K>) -> Result<QuadraticCheck> {
    let mut degrees: Vec<u32> = q
        .defining_ideal()
        .minimal_generators()?
        .iter()
        .filter_map(|g| g.total_degree())
        .collect();
    degrees.sort_unstable();
    Ok(QuadraticCheck {
        quadratic: degrees.iter().all(|&d| d == 2),
        degrees,
    })
}
