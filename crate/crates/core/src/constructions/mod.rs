//! Builders for families of graded algebras: Veronese and diagonal
//! subalgebras, Veronese modules, pinched Veroneses, Rees algebras of
//! complete intersections, lifts of quadratic complete intersections, and
//! the determinantal comparison ideal.

mod cs;
mod rees;
mod subalgebra;
mod veronese_module;

pub use cs::{
    cartwright_sturmfels_check, cs_membership, cs_monomial_generators, cs_ring, determinantal_ideal, CsReport, CsRow,
};
pub use rees::{check_regular_sequence, ci_lift, rees_ci_presentation, CiLift};
pub use subalgebra::{
    diagonal_subalgebra, pinched_veronese, pinched_veronese_monomials, veronese_presentation,
    SubalgebraPresentation,
};
pub use veronese_module::{veronese_module_presentation, ModulePresentation};
