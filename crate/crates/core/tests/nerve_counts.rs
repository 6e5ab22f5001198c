//! Level sizes of `N𝒢` against closed-form counts.

use hcnerve::groups::{FiniteGroup, SimplicialGroupoid};
use hcnerve::hc::{build_nerve_data, enumerate_hc_functors};
use hcnerve::instance::InstanceSpec;
use hcnerve::Error;

fn powers(base: usize, scale: impl Fn(usize) -> usize, top: usize) -> Vec<usize> {
    (0..=top).map(|n| scale(n) * base.pow(n as u32)).collect()
}

#[test]
fn constant_groups_have_order_to_the_n() {
    for (h, top) in [(FiniteGroup::cyclic(2).unwrap(), 4), (FiniteGroup::cyclic(3).unwrap(), 4), (FiniteGroup::symmetric(3).unwrap(), 3)] {
        let g = SimplicialGroupoid::constant_group(&h, top);
        let nerve = build_nerve_data(&g, top, 1_000_000).unwrap();
        assert_eq!(nerve.sset.counts(), powers(h.order(), |_| 1, top).as_slice());
        assert!(nerve.stats.iter().all(|s| s.rejected == 0));
    }
}

#[test]
fn two_object_groupoid_counts() {
    // n + 1 objects, then one arrow of H per generator.
    let g = SimplicialGroupoid::two_object(&FiniteGroup::cyclic(2).unwrap(), 3);
    let nerve = build_nerve_data(&g, 3, 1_000_000).unwrap();
    let expect: Vec<usize> = (0..=3u32).map(|n| 2usize.pow(n + 1) * 2usize.pow(n)).collect();
    assert_eq!(nerve.sset.counts(), expect.as_slice());
}

#[test]
fn crossed_module_counts_are_products_of_level_orders() {
    let g = InstanceSpec::parse_group_arg("xmod:c2,c2,trivial").unwrap().build(4).unwrap();
    let nerve = build_nerve_data(&g, 4, 1_000_000).unwrap();
    let expect: Vec<usize> = (0..=4).map(|n| (0..n).map(|j| g.arrows(j)).product()).collect();
    assert_eq!(expect, vec![1, 2, 8, 64, 1024]);
    assert_eq!(nerve.sset.counts(), expect.as_slice());
    assert!(nerve.stats.iter().all(|s| s.rejected == 0));
}

#[test]
fn tiny_budget_is_reported_not_truncated() {
    let g = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(3).unwrap(), 3);
    match build_nerve_data(&g, 3, 10) {
        Err(Error::BudgetExceeded { cap, .. }) => assert_eq!(cap, 10),
        other => panic!("expected a budget error, got {other:?}"),
    }
    assert!(enumerate_hc_functors(&g, 3, 5).is_err());
}
