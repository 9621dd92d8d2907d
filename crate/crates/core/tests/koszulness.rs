mod common;

use common::*;
use koszul::koszulness::*;
use koszul::{Ideal, Monomial, QuotientRing};
use num_rational::Ratio;

fn kosnotlg_filtration(q: &QuotientRing, witnesses: &[(&str, &str, &str, &str)]) -> KoszulFiltration {
    KoszulFiltration::parse(q, &kosnotlg_filtration_ideals(), witnesses).unwrap()
}

fn canonical(names: &[&str], gens: &[&str]) -> CanonicalIdeal {
    let r = ring(names);
    let monos: Vec<Monomial> = gens
        .iter()
        .map(|g| r.parse(g).unwrap().leading_monomial().unwrap().clone())
        .collect();
    canonical_form(&monos, names.len())
}

#[test]
fn quadratic_checks() {
    assert!(is_quadratic(&ci_quadrics()).unwrap().quadratic);
    let poly = QuotientRing::polynomial_ring(&ring(&["x", "y"]));
    let check = is_quadratic(&poly).unwrap();
    assert!(check.quadratic && check.degrees.is_empty());
    let cubic = quotient(&["x", "y"], &["x^3", "x*y"]);
    assert!(!is_quadratic(&cubic).unwrap().quadratic);
    assert_eq!(is_quadratic(&cubic).unwrap().degree_counts(), vec![(2, 1), (3, 1)]);
}

#[test]
fn monomial_quotient_is_diagonal() {
    let q = quotient(&["a", "b", "c", "d"], &["a*b", "b*c", "c^2", "a*d"]);
    let cert = koszul_certificate_up_to(&q, 4, 10).unwrap();
    assert!(cert.diagonal);
    assert_eq!(cert.rate, Some(Ratio::from_integer(1)));
}

#[test]
fn r161_certificate_is_refuted() {
    let cert = koszul_certificate_up_to(&not_koszul_r161(), 4, 6).unwrap();
    assert!(!cert.diagonal);
    assert_eq!(cert.first_off_diagonal, Some(((3, 4), 5)));
}

#[test]
fn cubic_rate() {
    // F_2 sits in degree 3 and F_3 in degree 4.
    let cert = koszul_certificate_up_to(&quotient(&["x"], &["x^3"]), 5, 12).unwrap();
    assert_eq!(cert.first_off_diagonal, Some(((2, 3), 1)));
    assert_eq!(cert.rate, Some(Ratio::from_integer(2)));
}

#[test]
fn kosnotlg_filtration_verifies() {
    let q = kos_not_lg();
    let f = kosnotlg_filtration(&q, &kosnotlg_filtration_witnesses());
    assert_eq!(verify_koszul_filtration(&q, &f).unwrap(), FiltrationVerdict::Verified);
}

#[test]
fn corrupted_witness_fails_at_that_ideal() {
    let q = kos_not_lg();
    let mut w = kosnotlg_filtration_witnesses();
    // The true colon (c) : d is (a, c).
    w[2] = ("cd", "c", "d", "acd");
    let f = kosnotlg_filtration(&q, &w);
    match verify_koszul_filtration(&q, &f).unwrap() {
        FiltrationVerdict::Failed { ideal, .. } => assert_eq!(ideal, "cd"),
        other => panic!("expected failure, got {other:?}"),
    }
}

#[test]
fn flag_of_variables_on_a_polynomial_ring() {
    let q = QuotientRing::polynomial_ring(&ring(&["x1", "x2", "x3"]));
    let ideals: Vec<(&str, &[&str])> = vec![
        ("0", &[]),
        ("1", &["x1"]),
        ("2", &["x1", "x2"]),
        ("3", &["x1", "x2", "x3"]),
    ];
    let witnesses = [("1", "0", "x1", "0"), ("2", "1", "x2", "1"), ("3", "2", "x3", "2")];
    let f = KoszulFiltration::parse(&q, &ideals, &witnesses).unwrap();
    assert!(verify_koszul_filtration(&q, &f).unwrap().is_verified());
}

#[test]
fn strongly_koszul_monomial_rings() {
    let q = quotient(&["x", "y"], &["x*y"]);
    let basis = q.ambient().parse_all(&["x", "y"]).unwrap();
    assert_eq!(strongly_koszul_check(&q, &basis).unwrap(), StronglyKoszulOutcome::Verified);
    for gens in [
        vec!["a*b", "b*c", "c*d"],
        vec!["a^2", "a*b", "c*d"],
        vec!["a*b", "a*c", "a*d", "b^2"],
        vec!["a^2", "b^2", "c^2", "d^2"],
    ] {
        let q = quotient(&["a", "b", "c", "d"], &gens);
        let basis = q.ambient().parse_all(&["a", "b", "c", "d"]).unwrap();
        assert_eq!(strongly_koszul_check(&q, &basis).unwrap(), StronglyKoszulOutcome::Verified, "{gens:?}");
    }
}

#[test]
fn strongly_koszul_kosnotlg_golden() {
    let q = kos_not_lg();
    let basis = q.ambient().parse_all(&["a", "b", "c", "d"]).unwrap();
    assert_eq!(
        strongly_koszul_check(&q, &basis).unwrap(),
        StronglyKoszulOutcome::Counterexample { y: vec![], x: "b".into() }
    );
}

#[test]
fn lg_search_kosnotlg_is_obstructed() {
    let res = lg_obstruction_search(&[1, 2, -2, -2, 2], 5).unwrap();
    assert_eq!((res.codimension, res.quadrics), (2, 5));
    assert!(res.exhaustive);
    assert!(res.obstructed());
}

#[test]
fn lg_search_finds_exactly_three_ideals() {
    let res = lg_obstruction_search(&[1, 3, 0, -3], 6).unwrap();
    let by_size: Vec<(usize, usize)> = res.levels.iter().map(|l| (l.nvars, l.ideals.len())).collect();
    assert_eq!(by_size, vec![(3, 0), (4, 0), (5, 1), (6, 1), (7, 1), (8, 0), (9, 0)]);
    assert!(res.exhaustive);
    let names = ["a", "b", "c", "d", "e", "f", "g"];
    let u1 = canonical(&names[..5], &["a^2", "b^2", "a*d", "c*d", "b*e", "c*e"]);
    let u2 = canonical(&names[..6], &["a^2", "a*d", "b*d", "b*e", "c*e", "c*f"]);
    let u3 = canonical(&names[..7], &["a*d", "b*d", "a*e", "c*e", "b*f", "c*g"]);
    let found: Vec<&CanonicalIdeal> = res.all_ideals().collect();
    assert_eq!(found, vec![&u1, &u2, &u3]);
}

#[test]
fn lg_search_trivial_h() {
    let res = lg_obstruction_search(&[1], 2).unwrap();
    let found: Vec<(usize, usize)> = res
        .levels
        .iter()
        .filter(|l| !l.ideals.is_empty())
        .map(|l| (l.nvars, l.ideals[0].gens.len()))
        .collect();
    assert_eq!(found, vec![(0, 0)]);
}

#[test]
fn g_quadratic_search_outcomes() {
    let q = quotient(&["x", "y"], &["x*y"]);
    match g_quadratic_search(&q, &GQuadBudget::default()).unwrap() {
        GQuadOutcome::Found(cert) => assert!(verify_g_quadratic(&q, &cert).unwrap()),
        other => panic!("{other:?}"),
    }
    let budget = GQuadBudget::default();
    assert_eq!(
        g_quadratic_search(&ci_quadrics(), &budget).unwrap(),
        GQuadOutcome::NotFound { attempts: 8 + 2 * budget.random_changes }
    );
    let cubic = quotient(&["x", "y"], &["x^3"]);
    assert_eq!(g_quadratic_search(&cubic, &budget).unwrap(), GQuadOutcome::NotQuadratic);
}

#[test]
fn report_on_kosnotlg() {
    let q = kos_not_lg();
    let opts = ReportOptions {
        lg_extra_vars: Some(5),
        filtration: Some(kosnotlg_filtration(&q, &kosnotlg_filtration_witnesses())),
        ..ReportOptions::default()
    };
    let rep = full_report(&q, &opts).unwrap();
    assert!(rep.quadratic.value.quadratic);
    assert!(!rep.numeric.as_ref().unwrap().value.obstructed);
    assert_eq!(rep.lg_obstructed(), Some(true));
    assert_eq!(rep.verdict, Verdict::Koszul);
    assert!(!rep.g_quadratic_found());
}

#[test]
fn report_on_r161() {
    let rep = full_report(&not_koszul_r161(), &ReportOptions::default()).unwrap();
    assert!(rep.quadratic.value.quadratic);
    assert_eq!(rep.verdict, Verdict::NotKoszul);
    let numeric = &rep.numeric.as_ref().unwrap().value;
    assert!(numeric.obstructed);
    assert_eq!(numeric.series.first_negative_inverse, Some(6));
    assert_eq!(numeric.series.deviations.get(3), 0);
    let betti = &rep.betti.as_ref().unwrap().value;
    assert_eq!(betti.first_off_diagonal, Some(((3, 4), 5)));
}

#[test]
fn report_on_polynomial_ring() {
    let q = QuotientRing::polynomial_ring(&ring(&["x", "y", "z"]));
    let opts = ReportOptions {
        g_quadratic: Some(GQuadBudget::default()),
        ..ReportOptions::default()
    };
    let rep = full_report(&q, &opts).unwrap();
    assert!(rep.g_quadratic_found());
    assert_eq!(rep.verdict, Verdict::Koszul);
    assert!(!rep.numeric.unwrap().value.obstructed);
    assert!(rep.betti.unwrap().value.diagonal);
}

#[test]
fn zero_ideal_has_no_generators() {
    let r = ring(&["x"]);
    assert!(Ideal::zero(&r).minimal_generators().unwrap().is_empty());
}
