//! All criteria together, combined along G-quadratic ⇒ LG-quadratic ⇒
//! Koszul ⇒ quadratic.

use std::time::{Duration, Instant};

use serde::Serialize;

use super::certificate::{koszul_certificate_up_to, KoszulCertificate};
use super::filtration::{verify_koszul_filtration, FiltrationVerdict, KoszulFiltration};
use super::gquad::{g_quadratic_search, GQuadBudget, GQuadOutcome};
use super::lg_search::{lg_obstruction_search, LgSearchResult};
use super::quadratic::{is_quadratic, QuadraticCheck};
use crate::error::Result;
use crate::groebner::QuotientRing;
use crate::hilbert::{hilbert_series, series_obstructions, HilbertSeries, SeriesObstructions};
use crate::poly::Field;

#[derive(Clone, Debug)]
pub struct ReportOptions<K: Field> {
    /// Truncation order of the power series checks.
    pub truncation: usize,
    pub hom_bound: usize,
    pub deg_bound: i64,
    pub g_quadratic: Option<GQuadBudget>,
    /// Largest number of extra variables for the LG search.
    pub lg_extra_vars: Option<usize>,
    pub filtration: Option<KoszulFiltration<K>>,
}

impl<K: Field> Default for ReportOptions<K> {
    fn default() -> Self {
        ReportOptions {
            truncation: 12,
            hom_bound: 4,
            deg_bound: 10,
            g_quadratic: None,
            lg_extra_vars: None,
            filtration: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Certified Koszul (G-quadratic certificate or verified filtration).
    Koszul,
    /// Certified not Koszul.
    NotKoszul,
    /// No certificate either way within the bounds.
    Inconclusive,
}

/// Numerical obstructions with their interpretation. A zero deviation
/// obstructs Koszulness only when the ring is not a complete intersection.
#[derive(Clone, Debug, Serialize)]
pub struct NumericCheck {
    pub hilbert_series: String,
    pub complete_intersection: bool,
    pub series: SeriesObstructions,
    pub obstructed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timed<T> {
    pub value: T,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<Timed<T>> {
    let start = Instant::now();
    let value = f()?;
    Ok(Timed {
        value,
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagnosticReport {
    pub quadratic: Timed<QuadraticCheck>,
    pub numeric: Option<Timed<NumericCheck>>,
    pub betti: Option<Timed<KoszulCertificate>>,
    pub g_quadratic: Option<Timed<GQuadOutcome>>,
    pub lg: Option<Timed<LgSearchResult>>,
    pub filtration: Option<Timed<FiltrationVerdict>>,
    pub verdict: Verdict,
    /// The criterion deciding the verdict, if any.
    pub decided_by: Option<String>,
}

impl DiagnosticReport {
    /// An LG obstruction is only meaningful together with the rest of the
    /// chain: it rules out G- and LG-quadratic, not Koszul.
    pub fn lg_obstructed(&self) -> Option<bool> {
        self.lg.as_ref().map(|l| l.value.obstructed())
    }

    pub fn g_quadratic_found(&self) -> bool {
        matches!(self.g_quadratic.as_ref().map(|g| &g.value), Some(GQuadOutcome::Found(_)))
    }
}

/// Runs the requested criteria. A non-quadratic ring is reported as not
/// Koszul without running anything else.
pub fn full_report<K: Field>(q: &QuotientRing<K>, opts: &ReportOptions<K>) -> Result<DiagnosticReport> {
    let quadratic = timed(|| is_quadratic(q))?;
    if !quadratic.value.quadratic {
        return Ok(DiagnosticReport {
            quadratic,
            numeric: None,
            betti: None,
            g_quadratic: None,
            lg: None,
            filtration: None,
            verdict: Verdict::NotKoszul,
            decided_by: Some("quadratic".into()),
        });
    }
    let mut series: Option<HilbertSeries> = None;
    let numeric = if q.ambient().is_standard_graded() {
        let mingens = quadratic.value.degrees.len();
        Some(timed(|| {
            let h = hilbert_series(q)?;
            let codim = q.nvars() - h.dimension();
            let ci = mingens == codim;
            let s = series_obstructions(&h, opts.truncation);
            let obstructed = s.first_negative_inverse.is_some()
                || s.deviations.first_negative().is_some()
                || (!ci && s.first_nonpositive_deviation.is_some());
            series = Some(h.clone());
            Ok(NumericCheck {
                hilbert_series: h.to_string(),
                complete_intersection: ci,
                series: s,
                obstructed,
            })
        })?)
    } else {
        None
    };
    let betti = timed(|| koszul_certificate_up_to(q, opts.hom_bound, opts.deg_bound))?;
    let g_quadratic = match &opts.g_quadratic {
        Some(b) => Some(timed(|| g_quadratic_search(q, b))?),
        None => None,
    };
    let lg = match (opts.lg_extra_vars, &series) {
        (Some(k), Some(h)) => Some(timed(|| lg_obstruction_search(h.h_polynomial(), k))?),
        _ => None,
    };
    let filtration = match &opts.filtration {
        Some(f) => Some(timed(|| verify_koszul_filtration(q, f))?),
        None => None,
    };

    let mut verdict = Verdict::Inconclusive;
    let mut decided_by = None;
    if numeric.as_ref().is_some_and(|n| n.value.obstructed) {
        verdict = Verdict::NotKoszul;
        decided_by = Some("numeric".into());
    } else if !betti.value.diagonal {
        verdict = Verdict::NotKoszul;
        decided_by = Some("betti".into());
    } else if matches!(g_quadratic.as_ref().map(|g| &g.value), Some(GQuadOutcome::Found(_))) {
        verdict = Verdict::Koszul;
        decided_by = Some("g_quadratic".into());
    } else if filtration.as_ref().is_some_and(|f| f.value.is_verified()) {
        verdict = Verdict::Koszul;
        decided_by = Some("filtration".into());
    }
    Ok(DiagnosticReport {
        quadratic,
        numeric,
        betti: Some(betti),
        g_quadratic,
        lg,
        filtration,
        verdict,
        decided_by,
    })
}
