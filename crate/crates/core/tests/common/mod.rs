#![allow(dead_code)]

use koszul::constructions::ci_lift;
use koszul::hilbert::hilbert_series;
use koszul::koszulness::*;
use koszul::{PolynomialRing, QuotientRing};

pub fn ring(names: &[&str]) -> PolynomialRing {
    PolynomialRing::rationals(names).unwrap()
}

pub fn quotient(names: &[&str], gens: &[&str]) -> QuotientRing {
    QuotientRing::parse(&ring(names), gens).unwrap()
}

pub fn kos_not_lg() -> QuotientRing {
    quotient(&["a", "b", "c", "d"], &["a*c", "a*d", "a*b - b*d", "a^2 + b*c", "b^2"])
}

pub fn lg_non_obstructed() -> QuotientRing {
    quotient(&["a", "b", "c", "d"], &["a^2 - b*c", "d^2", "c*d", "b^2", "a*c", "a*b"])
}

/// Quadratic, with `beta_34 = 5` over itself.
pub fn not_koszul_r161() -> QuotientRing {
    quotient(&["x", "y", "z", "t"], &["x^2", "y^2", "z^2", "t^2", "x*y + z*t"])
}

pub fn ci_quadrics() -> QuotientRing {
    quotient(&["x", "y", "z"], &["x^2 + y*z", "y^2 + x*z", "z^2 + x*y"])
}

pub fn kosnotlg_filtration_ideals() -> Vec<(&'static str, &'static [&'static str])> {
    vec![
        ("m", &["a", "b", "c", "d"]),
        ("acd", &["a", "c", "d"]),
        ("cd", &["c", "d"]),
        ("ac", &["a", "c"]),
        ("c", &["c"]),
        ("a", &["a"]),
        ("0", &[]),
    ]
}

pub fn kosnotlg_filtration_witnesses() -> Vec<(&'static str, &'static str, &'static str, &'static str)> {
    vec![
        ("m", "acd", "b", "m"),
        ("acd", "cd", "a", "m"),
        ("cd", "c", "d", "ac"),
        ("ac", "c", "a", "acd"),
        ("a", "0", "a", "cd"),
        ("c", "0", "c", "a"),
    ]
}

/// A small corpus of standard graded rings, labelled.
pub fn corpus() -> Vec<(&'static str, QuotientRing)> {
    vec![
        ("polynomial ring in 3 variables", QuotientRing::polynomial_ring(&ring(&["x", "y", "z"]))),
        ("xy", quotient(&["x", "y"], &["x*y"])),
        ("x2 y2", quotient(&["x", "y"], &["x^2", "y^2"])),
        ("x2 xy", quotient(&["x", "y"], &["x^2", "x*y"])),
        ("conic", quotient(&["a", "b", "c"], &["b^2 - a*c"])),
        ("twisted cubic", quotient(&["a", "b", "c", "d"], &["a*c - b^2", "a*d - b*c", "b*d - c^2"])),
        ("path ideal", quotient(&["a", "b", "c", "d"], &["a*b", "b*c", "c*d"])),
        ("ci of quadrics", ci_quadrics()),
        ("kos not lg", kos_not_lg()),
        ("lg non obstructed", lg_non_obstructed()),
        ("r161", not_koszul_r161()),
        ("cubic", quotient(&["x", "y"], &["x^3"])),
    ]
}

/// Corpus rings together with an actual Koszulness certificate.
pub fn certified_koszul() -> Vec<(&'static str, QuotientRing)> {
    let mut out = Vec::new();
    for (name, q) in corpus() {
        let certified = match name {
            "kos not lg" => {
                let f = KoszulFiltration::parse(&q, &kosnotlg_filtration_ideals(), &kosnotlg_filtration_witnesses())
                    .unwrap();
                verify_koszul_filtration(&q, &f).unwrap().is_verified()
            }
            // LG-quadratic through its lift.
            "ci of quadrics" => {
                let lift = ci_lift(&q).unwrap();
                lift.y_regular && verify_g_quadratic(&lift.ring, &lift.certificate).unwrap()
            }
            _ => matches!(g_quadratic_search(&q, &GQuadBudget::default()).unwrap(), GQuadOutcome::Found(_)),
        };
        if certified {
            out.push((name, q));
        }
    }
    out
}

pub fn codimension(q: &QuotientRing) -> usize {
    q.nvars() - hilbert_series(q).unwrap().dimension()
}
