mod common;

use common::*;
use koszul::hilbert::{froberg_identity_check, hilbert_series};
use koszul::resolution::*;
use koszul::{Ideal, QuotientRing};

fn choose(n: u64, k: usize) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn entries(t: &BettiTable) -> Vec<((usize, i64), u64)> {
    t.entries().collect()
}

#[test]
fn complete_intersection_x2_y2() {
    let r = ring(&["x", "y"]);
    let t = minimal_betti_table_s(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap(), 4, 8).unwrap();
    assert_eq!(entries(&t), vec![((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]);
    assert_eq!(t.projective_dimension(), Some(2));
    assert_eq!(t.regularity(), Some(2));
}

#[test]
fn tate_example_x2_xy() {
    let r = ring(&["x", "y"]);
    let t = minimal_betti_table_s(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap(), 4, 8).unwrap();
    assert_eq!(entries(&t), vec![((0, 0), 1), ((1, 2), 2), ((2, 3), 1)]);
}

#[test]
fn maps_over_s_compose_to_zero() {
    let q = kos_not_lg();
    let res = resolution_of_quotient(q.defining_ideal(), 5, 10).unwrap();
    assert_eq!(res.table.projective_dimension(), Some(4));
    for w in res.maps.windows(2) {
        assert!(w[0].is_graded() && w[0].is_minimal());
        assert!(w[0].compose(&w[1]).is_zero());
    }
    let expected = vec![((0, 0), 1), ((1, 2), 5), ((2, 3), 4), ((2, 4), 4), ((3, 5), 6), ((4, 6), 2)];
    assert_eq!(entries(&res.table), expected);
}

#[test]
fn residue_field_over_cyclic_quotients() {
    for v in 2..=4i64 {
        let q = quotient(&["x"], &[&format!("x^{v}")]);
        let t = betti_table_over_quotient(&q, &RModule::ResidueField, 5, 3 * v + 2).unwrap();
        for i in 0..=5usize {
            let j = (i as i64 / 2) * v + (i as i64 % 2);
            if t.is_certified(j) {
                assert_eq!(t.get(i, j), 1, "v={v}, i={i}");
                assert_eq!(t.total(i), 1, "v={v}, i={i}");
            }
        }
    }
}

#[test]
fn residue_field_over_polynomial_ring_is_koszul_complex() {
    let q = QuotientRing::polynomial_ring(&ring(&["a", "b", "c", "d"]));
    let t = betti_table_over_quotient(&q, &RModule::ResidueField, 5, 7).unwrap();
    for i in 0..=4 {
        assert_eq!(t.get(i, i as i64), choose(4, i));
        assert_eq!(t.total(i), choose(4, i));
    }
    assert_eq!(t.total(5), 0);
}

#[test]
fn r161_has_beta_34_five() {
    let q = not_koszul_r161();
    let res = resolution_over_quotient(&q, &RModule::ResidueField, 4, 8).unwrap();
    let t = &res.table;
    assert_eq!(t.get(3, 4), 5);
    for ((i, j), _) in t.entries() {
        if i <= 3 && t.is_certified(j) && (i, j) != (3, 4) {
            assert_eq!(j, i as i64, "unexpected entry ({i},{j})");
        }
    }
    assert_eq!(t.first_off_diagonal(), Some(((3, 4), 5)));
    for w in res.maps.windows(2) {
        assert!(w[0].compose(&w[1]).is_zero_in(&q));
    }
}

#[test]
fn froberg_fails_on_r161() {
    let q = not_koszul_r161();
    let t = betti_table_over_quotient(&q, &RModule::ResidueField, 6, 7).unwrap();
    let h = hilbert_series(&q).unwrap();
    let check = froberg_identity_check(&h, &t.diagonal(6), 8);
    assert!(matches!(check.first_mismatch, Some(k) if k <= 8));
}

#[test]
fn koszul_homology_matches_betti_over_s() {
    let q = kos_not_lg();
    let slices = koszul_homology_dims(&q, 4, 8).unwrap();
    let s = minimal_betti_table_s(q.defining_ideal(), 4, 9).unwrap();
    for slice in &slices {
        for j in 0..=8 {
            assert_eq!(slice.dim(j), s.get(slice.i, j), "H_{} in degree {j}", slice.i);
        }
    }
    assert_eq!(slices[1].top(), Some(2));
    assert_eq!(slices[1].dim(2), 5);
}

#[test]
fn koszul_homology_of_a_square() {
    let q = quotient(&["x"], &["x^2"]);
    let slices = koszul_homology_dims(&q, 1, 5).unwrap();
    assert_eq!(slices[1].dims.iter().filter(|(_, &d)| d > 0).map(|(&j, &d)| (j, d)).collect::<Vec<_>>(),
        vec![(2, 1)]);
    let s = QuotientRing::polynomial_ring(&ring(&["x", "y"]));
    let slices = koszul_homology_dims(&s, 2, 5).unwrap();
    assert!(slices[1..].iter().all(|sl| sl.dims.values().all(|&d| d == 0)));
}

#[test]
fn taylor_bounds_for_small_ideals() {
    let r = ring(&["x", "y"]);
    let t = taylor_bounds(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap()).unwrap();
    assert_eq!((t.total(0), t.total(1), t.total(2)), (1, 2, 1));
    assert_eq!(t.t(2), Some(3));
    let r = ring(&["x1", "x2"]);
    let t = taylor_bounds(&Ideal::parse(&r, &["x1*x2"]).unwrap()).unwrap();
    assert_eq!(t.projective_dimension(), Some(1));
    assert!(taylor_bounds(&Ideal::parse(&r, &["x1^2 + x2^2"]).unwrap()).is_err());
}

#[test]
fn taylor_bounds_dominate_actual_betti_numbers() {
    let r = ring(&["a", "b", "c", "d"]);
    let i = Ideal::parse(&r, &["a*b", "b*c", "c*d", "a^2"]).unwrap();
    let taylor = taylor_bounds(&i).unwrap();
    let actual = minimal_betti_table_s(&i, 4, 10).unwrap();
    for ((i, j), v) in actual.entries() {
        assert!(v <= taylor.get(i, j), "({i},{j})");
    }
    for i in 0..=4 {
        assert!(actual.t(i).unwrap_or(0) <= 2 * i as i64);
        assert!(actual.total(i) <= choose(4, i));
    }
}
