//! The comparison functor: unit, vertices on two-element sets, naturality,
//! and uniqueness by exhaustion.

use hcnerve::comparison::{check_naturality, iota_vertex, phi_functor_failures, phi_one_is_identity, uniqueness_by_exhaustion};
use hcnerve::hc::cosimplicial_identity_failures;

#[test]
fn unit_is_identity() {
    assert!(phi_one_is_identity());
}

#[test]
fn two_element_sets_go_to_the_staircase() {
    for n in 0..=4 {
        for i in 0..=n {
            for j in i..=n {
                let expect: Vec<usize> = (0..j - i).collect();
                assert_eq!(iota_vertex(n, i, j).unwrap(), expect, "n = {n}, i = {i}, j = {j}");
            }
        }
    }
}

#[test]
fn target_is_cosimplicial() {
    assert_eq!(cosimplicial_identity_failures(4), Vec::<String>::new());
}

#[test]
fn functor_at_every_level() {
    for n in 0..=4 {
        assert_eq!(phi_functor_failures(n).unwrap(), Vec::<String>::new());
    }
}

#[test]
fn natural_through_three() {
    let r = check_naturality(3, 3).unwrap();
    assert!(r.passed(), "{:?}", &r.failures[..r.failures.len().min(3)]);
    // Σ_{p,q ≤ 3} C(p + q + 1, p + 1) monotone maps.
    assert_eq!(r.maps_checked, 121);
}

#[test]
fn unique_through_three() {
    let r = uniqueness_by_exhaustion(3).unwrap();
    assert_eq!(r.families, 1728);
    assert_eq!(r.survivors, 1);
    assert!(r.survivor_is_phi);
    assert!(uniqueness_by_exhaustion(4).is_err());
}
