//! Hilbert series, power-series obstructions and multigraded counts.

mod identities;
mod monomial_ideal;
mod multigraded;
mod series;

pub use identities::{big_binomial, bounded_degree_identity, count_identity, count_identity_check, CountIdentity};
pub use monomial_ideal::{hilbert_series, monomial_numerator};
pub use multigraded::{monomials_of_multidegree, multigraded_hilbert_function};
pub use series::{
    format_z_polynomial, froberg_identity_check, parse_coefficients, series_obstructions,
    DeviationSequence, FrobergCheck, HilbertSeries, SeriesObstructions, SeriesTruncation,
};
pub(crate) use series::binomial;
