//! Certificates and obstructions for the Koszul property.

mod certificate;
mod filtration;
mod gquad;
mod lg_search;
mod quadratic;
mod report;

pub use certificate::{certificate_from_table, koszul_certificate_up_to, KoszulCertificate};
pub use filtration::{
    strongly_koszul_check, verify_koszul_filtration, FiltrationIdeal, FiltrationVerdict, FiltrationWitness,
    KoszulFiltration, StronglyKoszulOutcome,
};
pub use gquad::{g_quadratic_search, verify_g_quadratic, GQuadBudget, GQuadCertificate, GQuadOutcome};
pub use lg_search::{canonical_form, lg_obstruction_search, CanonicalIdeal, LgLevel, LgSearchResult};
pub use quadratic::{is_quadratic, QuadraticCheck};
pub use report::{full_report, DiagnosticReport, NumericCheck, ReportOptions, Timed, Verdict};
