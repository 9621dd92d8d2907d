//! Groebner bases and the ideal operations built on them.

pub(crate) mod engine;
mod ideal;
pub(crate) mod module;
mod ops;
mod quotient;

pub use ideal::{normal_form, reduced_groebner_basis, truncated_groebner_basis, GroebnerBasis, Ideal};
pub use module::{apply_map, FreeModule, ModuleElement, Submodule};
pub use ops::{
    algebra_map_kernel, colon_by_element, eliminate, ideal_colon, ideal_contained, ideal_equal,
    ideal_intersection, kernel_of_map, reduced,
};
pub use quotient::{monomials_of_degree, QuotientRing};
