mod common;

use common::*;
use koszul::constructions::*;
use koszul::hilbert::{hilbert_series, monomials_of_multidegree};
use koszul::koszulness::{is_quadratic, koszul_certificate_up_to, verify_g_quadratic};
use koszul::resolution::{betti_table_over_quotient, minimal_betti_table_s};
use koszul::{Ideal, Monomial, QuotientRing};

fn polynomial_ring(names: &[&str]) -> QuotientRing {
    QuotientRing::polynomial_ring(&ring(names))
}

#[test]
fn veronese_of_the_plane_is_a_conic() {
    let v = veronese_presentation(&polynomial_ring(&["x", "y"]), 2).unwrap();
    assert_eq!(v.generators.len(), 3);
    assert_eq!(v.kernel_degrees().unwrap(), vec![2]);
    assert!(v.verify());
    let t = minimal_betti_table_s(&v.kernel, 3, 6).unwrap();
    assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 2), 1)]);
}

#[test]
fn first_veronese_is_the_identity() {
    let q = kos_not_lg();
    let v = veronese_presentation(&q, 1).unwrap();
    assert_eq!(v.generators.len(), 4);
    assert!(v.verify());
    // Same Hilbert series as the source, hence the same ring up to renaming.
    assert_eq!(hilbert_series(&v.quotient().unwrap()).unwrap(), hilbert_series(&q).unwrap());
    assert_eq!(v.kernel.minimal_generators().unwrap().len(), 5);
}

#[test]
fn veronese_hilbert_function_is_a_slice() {
    for (name, q) in [("kos not lg", kos_not_lg()), ("ci", ci_quadrics()), ("xy", quotient(&["x", "y"], &["x*y"]))] {
        for c in 2..=3u32 {
            let v = veronese_presentation(&q, c).unwrap();
            assert!(v.verify(), "{name}");
            let h = hilbert_series(&v.quotient().unwrap()).unwrap();
            let hr = hilbert_series(&q).unwrap();
            for j in 0..=6usize {
                assert_eq!(h.coefficient(j), hr.coefficient(j * c as usize), "{name}, c={c}, j={j}");
            }
        }
    }
}

#[test]
fn second_veronese_of_four_variables() {
    let v = veronese_presentation(&polynomial_ring(&["x1", "x2", "x3", "x4"]), 2).unwrap();
    assert_eq!(v.generators.len(), 10);
    let t = minimal_betti_table_s(&v.kernel, 7, 20).unwrap();
    assert_eq!(t.projective_dimension(), Some(6));
    assert_eq!(t.regularity(), Some(2));
}

#[test]
fn veronese_bound_on_high_veronese_of_kosnotlg() {
    // Over S, t_1 = 2 and t_2 = 4 for this ring, so c >= 2 is large enough.
    let v = veronese_presentation(&kos_not_lg(), 2).unwrap();
    let cert = koszul_certificate_up_to(&v.quotient().unwrap(), 3, 4).unwrap();
    assert!(cert.diagonal);
}

#[test]
fn veronese_module_of_the_plane() {
    let vm = veronese_module_presentation(&polynomial_ring(&["x", "y"]), 2, 1, 4).unwrap();
    assert_eq!(vm.generators.len(), 2);
    assert!(vm.verify());
    assert_eq!(vm.relations.len(), 2);
    assert!(vm.relations.iter().all(|r| r.iter().all(|e| e.total_degree().is_none_or(|d| d == 1))));
    let t = betti_table_over_quotient(&vm.base_ring, &vm.module(), 3, 4).unwrap();
    assert!(t.entries().all(|((i, j), _)| j == i as i64));
}

#[test]
fn veronese_module_zero_is_free() {
    let vm = veronese_module_presentation(&polynomial_ring(&["x", "y", "z"]), 2, 0, 4).unwrap();
    assert_eq!(vm.generators.len(), 1);
    assert!(vm.relations.is_empty());
}

#[test]
fn veronese_modules_have_linear_resolutions() {
    for q in [polynomial_ring(&["x", "y", "z"]), quotient(&["x", "y", "z"], &["x*y", "y*z"])] {
        for u in 1..3u32 {
            let vm = veronese_module_presentation(&q, 3, u, 3).unwrap();
            assert!(vm.verify());
            let t = betti_table_over_quotient(&vm.base_ring, &vm.module(), 2, 3).unwrap();
            assert_eq!(t.regularity(), Some(0), "u={u}");
        }
    }
}

#[test]
fn pinched_veronese_332_is_quadratic() {
    let pv = pinched_veronese(3, 3, 2).unwrap();
    let r = ring(&["x1", "x2", "x3"]);
    let mut expected: Vec<String> = ["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3"]
        .iter()
        .map(|s| r.parse(s).unwrap().to_string())
        .collect();
    let mut ours: Vec<String> = pv.generators.iter().map(|g| g.to_string()).collect();
    expected.sort();
    ours.sort();
    assert_eq!(ours, expected);
    assert!(pv.verify());
    assert!(pv.kernel_degrees().unwrap().iter().all(|&d| d == 2));
}

#[test]
fn full_pinched_veronese_is_the_veronese() {
    let pv = pinched_veronese(3, 2, 3).unwrap();
    let v = veronese_presentation(&polynomial_ring(&["x1", "x2", "x3"]), 2).unwrap();
    let a: Vec<String> = pv.generators.iter().map(|g| g.to_string()).collect();
    let b: Vec<String> = v.generators.iter().map(|g| g.to_string()).collect();
    assert_eq!(a, b);
    assert!(pinched_veronese(3, 2, 4).is_err());
}

#[test]
fn segre_and_coordinate_subalgebras() {
    let r = ring(&["x1", "x2", "y1", "y2"]).with_grading(vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]]).unwrap();
    let s = QuotientRing::polynomial_ring(&r);
    let seg = diagonal_subalgebra(&s, 1, 1).unwrap();
    assert_eq!(seg.generators.len(), 4);
    let det = Ideal::parse(seg.kernel.ring(), &["t1*t4 - t2*t3"]).unwrap();
    assert!(koszul::groebner::ideal_equal(&seg.kernel, &det).unwrap());
    let xs = diagonal_subalgebra(&s, 1, 0).unwrap();
    assert_eq!(xs.generators.len(), 2);
    assert!(xs.kernel.is_zero());
    assert!(diagonal_subalgebra(&kos_not_lg(), 1, 1).is_err());
}

#[test]
fn rees_algebra_of_two_squares() {
    let r = ring(&["x1", "x2"]);
    let f = r.parse_all(&["x1^2", "x2^2"]).unwrap();
    let rees = rees_ci_presentation(&f).unwrap();
    let gens = rees.defining_ideal().gens();
    assert_eq!(gens.len(), 1);
    let expected = rees.ambient().parse("y1*x2^2 - y2*x1^2").unwrap();
    assert!(gens[0] == expected || gens[0] == -&expected);
    assert_eq!(rees.ambient().multidegree(gens[0].leading_monomial().unwrap()), vec![2, 1]);
    let xy = ring(&["x", "y"]);
    assert!(rees_ci_presentation(&xy.parse_all(&["x^2", "x*y"]).unwrap()).is_err());
}

#[test]
fn rees_diagonals_are_quadratic() {
    for n in 2..=3usize {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        let r = ring(&names);
        let squares: Vec<String> = names.iter().map(|x| format!("{x}^2")).collect();
        let squares: Vec<&str> = squares.iter().map(String::as_str).collect();
        let rees = rees_ci_presentation(&r.parse_all(&squares).unwrap()).unwrap();
        for c in 1..=2i64 {
            let d = diagonal_subalgebra(&rees, c, 1).unwrap();
            // Generators: monomials of degree c + 2 with some exponent >= 2.
            let expected = koszul::groebner::monomials_of_degree(n, c as u32 + 2)
                .into_iter()
                .filter(|m: &Monomial| m.exps().iter().any(|&e| e >= 2))
                .count();
            assert_eq!(d.generators.len(), expected, "n={n}, c={c}");
            assert!(d.verify());
            assert!(d.kernel_degrees().unwrap().iter().all(|&k| k == 2), "n={n}, c={c}");
            assert!(is_quadratic(&d.quotient().unwrap()).unwrap().quadratic);
        }
    }
}

#[test]
fn lift_of_the_ci_of_quadrics() {
    let q = ci_quadrics();
    let lift = ci_lift(&q).unwrap();
    assert_eq!(lift.certificate.initial_ideal, vec!["y1^2", "y2^2", "y3^2"]);
    assert!(lift.y_regular && lift.h_preserved);
    assert!(verify_g_quadratic(&lift.ring, &lift.certificate).unwrap());
    // A / (y) is R again.
    let a = lift.ring.ambient();
    let ys = Ideal::of_variables(a, &[0, 1, 2]);
    let sum = lift.ring.defining_ideal().sum(&ys).unwrap();
    let back = QuotientRing::new(koszul::groebner::eliminate(&sum, &[3, 4, 5]).unwrap()).unwrap();
    assert_eq!(hilbert_series(&back).unwrap(), hilbert_series(&q).unwrap());
}

#[test]
fn lift_of_one_square() {
    let lift = ci_lift(&quotient(&["x"], &["x^2"])).unwrap();
    assert_eq!(lift.certificate.initial_ideal, vec!["y1^2"]);
    assert_eq!(lift.ring.ambient().names(), &["y1".to_string(), "x".to_string()]);
    assert!(lift.y_regular && lift.h_preserved);
    assert!(ci_lift(&kos_not_lg()).is_err());
}

/// Membership via the generator description: some product
/// `t_{i1 j1} ... t_{ik jk}` with distinct rows and `sum j >= n + k`
/// divides `p`.
fn brute_membership(p: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(p))
}

#[test]
fn cs_membership_agrees_with_generators() {
    for (m, n) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let t = cs_ring(m, n).unwrap();
        let gens = cs_monomial_generators(m, n);
        let mut a = vec![0i64; m];
        loop {
            for p in monomials_of_multidegree(&t, &a).unwrap() {
                assert_eq!(cs_membership(&p, m, n), brute_membership(&p, &gens), "m={m} n={n} {p:?}");
            }
            let Some(i) = a.iter().position(|&x| x < 2) else { break };
            a[i] += 1;
            a[..i].fill(0);
        }
    }
}

#[test]
fn cs_full_support_criterion() {
    let (m, n) = (2, 3);
    let t = cs_ring(m, n).unwrap();
    for p in monomials_of_multidegree(&t, &[1, 2]).unwrap() {
        let total: usize = (0..m).map(|i| (0..n).rev().find(|&j| p.exp(i * n + j) > 0).unwrap() + 1).sum();
        assert_eq!(cs_membership(&p, m, n), total >= n + m);
    }
}

#[test]
fn cs_comparison_boxes() {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let rep = cartwright_sturmfels_check(m, n, 2).unwrap();
        assert_eq!(rep.rows.len(), 3usize.pow(m as u32));
        assert!(rep.all_equal, "m={m}, n={n}");
    }
    let rep = cartwright_sturmfels_check(2, 2, 1).unwrap();
    let row = rep.rows.iter().find(|r| r.a == vec![1, 1]).unwrap();
    assert_eq!((row.determinantal, row.monomial, row.formula), (3, 3, 3));
    // Multidegrees missing a factor reduce to fewer rows.
    let row = rep.rows.iter().find(|r| r.a == vec![0, 1]).unwrap();
    assert_eq!(row.formula, 2);
}
