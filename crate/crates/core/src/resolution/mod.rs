//! Truncated minimal graded free resolutions and Betti tables.

mod betti;
mod koszul_homology;
mod matrix;
mod over_r;
mod over_s;
mod pieces;
mod taylor;

pub use betti::{BettiRing, BettiTable};
pub use koszul_homology::{koszul_homology_dims, KoszulHomologySlice};
pub use matrix::GradedMatrix;
pub use over_r::{betti_table_over_quotient, resolution_over_quotient, RModule};
pub use over_s::{minimal_betti_table_s, resolution_of_cokernel, resolution_of_quotient};
pub use taylor::{quadratic_syzygy_bounds, taylor_bounds, QuadraticSyzygyBounds};

use crate::poly::{Field, Rationals};

/// The maps `F_i -> F_{i-1}` (`maps[i - 1]`) of a truncated minimal
/// resolution together with its Betti table.
#[derive(Clone, Debug)]
pub struct MinimalResolution<K: Field = Rationals> {
    pub table: BettiTable,
    pub maps: Vec<GradedMatrix<K>>,
}
