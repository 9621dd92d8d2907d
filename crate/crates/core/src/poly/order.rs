//! Monomial orders.
//!
//! Variables are ranked by index: `x_0 > x_1 > ... > x_{n-1}`. A different
//! variable precedence is obtained by listing the variables of the ring in
//! that precedence.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::monomial::{Exponent, Monomial};
use crate::error::PolyError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    DegRevLex,
    /// Compare `w . a` first, then fall back to `tiebreak`.
    Weight {
        weights: Vec<i64>,
        tiebreak: Box<MonomialOrder>,
    },
    /// Product order: the first `split` variables are compared with
    /// `first`; ties are broken on the remaining variables with `second`.
    /// With `first` degree-compatible this is an elimination order for the
    /// first block.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::DegRevLex
    }
}

impl MonomialOrder {
    /// Elimination order for the first `split` variables, each block
    /// compared by degrevlex.
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::DegRevLex),
            second: Box::new(MonomialOrder::DegRevLex),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(a.exps(), b.exps())),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| lex(a.exps(), b.exps())),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            _ => self.compare_slices(a.exps(), b.exps()),
        }
    }

    fn compare_slices(&self, a: &[Exponent], b: &[Exponent]) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::DegLex => total(a).cmp(&total(b)).then_with(|| lex(a, b)),
            MonomialOrder::DegRevLex => total(a).cmp(&total(b)).then_with(|| revlex(a, b)),
            MonomialOrder::Weight { weights, tiebreak } => {
                let wa: i64 = weights.iter().zip(a).map(|(w, &e)| w * e as i64).sum();
                let wb: i64 = weights.iter().zip(b).map(|(w, &e)| w * e as i64).sum();
                wa.cmp(&wb).then_with(|| tiebreak.compare_slices(a, b))
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                let s = (*split).min(a.len());
                first
                    .compare_slices(&a[..s], &b[..s])
                    .then_with(|| second.compare_slices(&a[s..], &b[s..]))
            }
        }
    }

    /// Checks that the order is usable on `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<(), PolyError> {
        match self {
            MonomialOrder::Weight { weights, tiebreak } => {
                if weights.len() != nvars {
                    return Err(PolyError::LengthMismatch(weights.len(), nvars));
                }
                if weights.iter().any(|&w| w < 0) {
                    return Err(PolyError::InvalidGrading {
                        expected: nvars,
                        reason: "order weights must be nonnegative".into(),
                    });
                }
                tiebreak.validate(nvars)
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => {
                if *split > nvars {
                    return Err(PolyError::LengthMismatch(*split, nvars));
                }
                first.validate(*split)?;
                second.validate(nvars - split)
            }
            _ => Ok(()),
        }
    }

    /// Whether the order refines the total degree.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            MonomialOrder::DegLex | MonomialOrder::DegRevLex => true,
            MonomialOrder::Weight { weights, .. } => {
                !weights.is_empty() && weights.iter().all(|&w| w == weights[0] && w > 0)
            }
            _ => false,
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::DegLex => write!(f, "deglex"),
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Weight { weights, tiebreak } => {
                write!(f, "weight{weights:?}+{tiebreak}")
            }
            MonomialOrder::Block {
                split,
                first,
                second,
            } => write!(f, "block({split}:{first},{second})"),
        }
    }
}

fn total(a: &[Exponent]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

fn lex(a: &[Exponent], b: &[Exponent]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Reverse lexicographic tie-break for equal degrees: the monomial with the
/// smaller exponent in the last differing variable is larger.
fn revlex(a: &[Exponent], b: &[Exponent]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Three-way comparison of two monomials of the same length.
pub fn monomial_compare(
    order: &MonomialOrder,
    a: &Monomial,
    b: &Monomial,
) -> Result<Ordering, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::LengthMismatch(a.nvars(), b.nvars()));
    }
    Ok(order.compare(a, b))
}
