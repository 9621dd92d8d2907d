use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::groebner::QuotientRing;
use crate::poly::Field;
use crate::resolution::{betti_table_over_quotient, BettiTable, RModule};

/// Truncated evidence about the resolution of `K` over `R`.
#[derive(Clone, Debug, Serialize)]
pub struct KoszulCertificate {
    #[serde(skip)]
    pub table: BettiTable,
    /// All certified entries satisfy `j = i`.
    pub diagonal: bool,
    /// First certified entry with `j != i`, as `((i, j), beta_ij)`.
    pub first_off_diagonal: Option<((usize, i64), u64)>,
    /// `max (t_{i+1} - 1) / i` over the computed range; 1 for Koszul rings.
    #[serde(serialize_with = "ratio_string")]
    pub rate: Option<Ratio<i64>>,
}

fn ratio_string<S: Serializer>(r: &Option<Ratio<i64>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Betti numbers of `K` over `R` through `(i_max, deg_bound)`: a diagonal
/// table is necessary for Koszulness; an off-diagonal entry refutes it.
pub fn koszul_certificate_up_to<K: Field>(q: &QuotientRing<K>, i_max: usize, deg_bound: i64) -> Result<KoszulCertificate> {
    let table = betti_table_over_quotient(q, &RModule::ResidueField, i_max, deg_bound)?;
    Ok(certificate_from_table(table))
}

pub fn certificate_from_table(table: BettiTable) -> KoszulCertificate {
    let first_off_diagonal = table.first_off_diagonal();
    let rate = (1..table.hom_bound())
        .filter_map(|i| {
            let t = table.t(i + 1)?;
            table.is_certified(t).then(|| Ratio::new(t - 1, i as i64))
        })
        .max();
    KoszulCertificate {
        diagonal: first_off_diagonal.is_none(),
        first_off_diagonal,
        rate,
        table,
    }
}
