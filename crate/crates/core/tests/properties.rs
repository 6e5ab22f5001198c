//! Randomized structural properties.

use hcnerve::comparison::phi_morphism;
use hcnerve::groups::{FiniteGroup, SimplicialGroupoid};
use hcnerve::hc::{alpha_push, IntervalPoset, WbarFunctor};
use hcnerve::invariants::pi1;
use hcnerve::simplicial::MonotoneMap;
use hcnerve::wbar::build_wbar;
use proptest::prelude::*;

fn monotone(max_dim: usize) -> impl Strategy<Value = MonotoneMap> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(|(p, q)| {
        let all = MonotoneMap::all(p, q);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

proptest! {
    #[test]
    fn decomposition_recomposes(alpha in monotone(5)) {
        let mut acc = MonotoneMap::identity(alpha.source_dim());
        for e in alpha.decompose() {
            acc = e.as_map().after(&acc);
        }
        prop_assert_eq!(acc, alpha);
    }

    #[test]
    fn push_respects_composition((a, b) in (0..=4usize, 0..=4usize, 0..=4usize).prop_flat_map(|(p, q, r)| {
        let first = MonotoneMap::all(p, q);
        let second = MonotoneMap::all(q, r);
        (0..first.len(), 0..second.len()).prop_map(move |(i, j)| (first[i].clone(), second[j].clone()))
    })) {
        let whole = WbarFunctor::push(&b.after(&a));
        prop_assert_eq!(&whole, &WbarFunctor::push(&b).after(&WbarFunctor::push(&a)));
        prop_assert!(whole.check());
    }

    #[test]
    fn phi_is_natural(alpha in monotone(4), pick in any::<prop::sample::Index>()) {
        let p = alpha.source_dim();
        let chains: Vec<_> = (0..=p)
            .flat_map(|i| (i..=p).map(move |j| (i, j)))
            .flat_map(|(i, j)| IntervalPoset::new(p, i, j).unwrap().strict_chains())
            .collect();
        let c = pick.get(&chains);
        let lhs = WbarFunctor::push(&alpha).apply(&phi_morphism(p, c));
        prop_assert_eq!(lhs, phi_morphism(alpha.target_dim(), &alpha_push(&alpha, c)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn wbar_of_cyclic_groups(m in 1usize..=4) {
        let g = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(m).unwrap(), 3);
        let w = build_wbar(&g, 3).unwrap();
        prop_assert!(w.validate().is_empty());
        let expect: Vec<usize> = (0..=3u32).map(|n| m.pow(n)).collect();
        prop_assert_eq!(w.counts(), expect.as_slice());
        prop_assert_eq!(pi1(&w, 0).unwrap().order(), m);
    }
}
