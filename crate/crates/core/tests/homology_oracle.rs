//! Group homology of W̄ and of the coherent nerve against the bar complex.

mod common;

use common::{bar_homology, dense_invariants, s3_oracle};
use hcnerve::groups::{FiniteGroup, SimplicialGroupoid};
use hcnerve::hc::build_nerve;
use hcnerve::invariants::{homology, HomologyGroup};
use hcnerve::wbar::build_wbar;

type Groups = Vec<(usize, Vec<u64>)>;

fn as_pairs(h: &[HomologyGroup]) -> Groups {
    h.iter().map(|g| (g.rank, g.torsion.clone())).collect()
}

fn both_sides(g: &SimplicialGroupoid, n: usize, through: usize) -> (Groups, Groups) {
    let w = homology(&build_wbar(g, n).unwrap(), through).unwrap();
    let nv = homology(&build_nerve(g, n).unwrap(), through).unwrap();
    (as_pairs(&w), as_pairs(&nv))
}

#[test]
fn oracle_self_check() {
    assert_eq!(dense_invariants(vec![vec![2, 4], vec![6, 8]]), (2, vec![2, 4]));
    assert_eq!(dense_invariants(vec![vec![2, 0], vec![0, 3]]), (2, vec![6]));
    assert_eq!(dense_invariants(vec![vec![0, 0]]), (0, vec![]));
}

#[test]
fn cyclic_two_through_three() {
    let expected = vec![(1, vec![]), (0, vec![2]), (0, vec![]), (0, vec![2])];
    assert_eq!(bar_homology(2, 0, |a, b| (a + b) % 2, 3), expected);
    let g = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2).unwrap(), 4);
    let (w, n) = both_sides(&g, 4, 3);
    assert_eq!(w, expected);
    assert_eq!(n, expected);
}

#[test]
fn cyclic_three_through_three() {
    let oracle = bar_homology(3, 0, |a, b| (a + b) % 3, 3);
    let g = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(3).unwrap(), 4);
    let (w, n) = both_sides(&g, 4, 3);
    assert_eq!(w, oracle);
    assert_eq!(n, oracle);
}

#[test]
fn symmetric_three_through_two() {
    let (perms, mul) = s3_oracle();
    let e = perms.iter().position(|p| *p == [0, 1, 2]).unwrap();
    let oracle = bar_homology(6, e, mul, 2);
    assert_eq!(oracle, vec![(1, vec![]), (0, vec![2]), (0, vec![])]);
    let g = SimplicialGroupoid::constant_group(&FiniteGroup::symmetric(3).unwrap(), 3);
    let (w, n) = both_sides(&g, 3, 2);
    assert_eq!(w, oracle);
    assert_eq!(n, oracle);
}

#[test]
fn klein_four_through_two() {
    let oracle = bar_homology(4, 0, |a, b| a ^ b, 2);
    assert_eq!(oracle, vec![(1, vec![]), (0, vec![2, 2]), (0, vec![2])]);
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let g = SimplicialGroupoid::constant_group(&FiniteGroup::product(&c2, &c2).unwrap(), 3);
    let (w, n) = both_sides(&g, 3, 2);
    assert_eq!(w, oracle);
    assert_eq!(n, oracle);
}
