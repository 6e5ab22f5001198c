//! Exhaustive check that `φ` is the only identity-on-objects morphism of
//! cosimplicial simplicial categories `C̃[Δ•] → Δ•_W̄` in low dimensions.
//!
//! Any such morphism is determined on vertices, and by compatibility with
//! composition it is determined by its values on the two-element sets
//! `{i, j}`. We enumerate every family of such values for `n ≤ max_n`,
//! extend multiplicatively, and keep the families that are monotone on the
//! hom posets and commute with every coface and codegeneracy in range.

use serde::{Deserialize, Serialize};

use super::phi_vertex;
use crate::hc::poset::{elements_of, push_subset, IntervalPoset, Subset};
use crate::hc::{WbarFunctor, WbarMorphism};
use crate::simplicial::MonotoneMap;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessReport {
    pub max_n: usize,
    pub families: usize,
    pub survivors: usize,
    /// The single survivor, if there is exactly one, equals `φ`.
    pub survivor_is_phi: bool,
}

impl UniquenessReport {
    pub fn passed(&self) -> bool {
        self.survivors == 1 && self.survivor_is_phi
    }
}

/// A pair `(n, i, j)` with the factor sizes of its vertex set.
type Slot = ((usize, usize, usize), Vec<usize>);

/// Pairs `(n, i, j)` with `i < j ≤ n`, `1 ≤ n ≤ max_n`, and the factor sizes
/// of `∏_{l=i+1..j} [n − l]` in generator order.
fn slots(max_n: usize) -> Vec<Slot> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for i in 0..n {
            for j in i + 1..=n {
                out.push(((n, i, j), (i + 1..=j).map(|l| n - l + 1).collect()));
            }
        }
    }
    out
}

/// A candidate family: for every slot, a vertex in generator order.
struct Family<'a> {
    slots: &'a [Slot],
    values: Vec<Vec<usize>>,
}

impl Family<'_> {
    fn pair(&self, n: usize, i: usize, j: usize) -> &[usize] {
        let k = self.slots.iter().position(|(s, _)| *s == (n, i, j)).expect("slot exists");
        &self.values[k]
    }

    /// The vertex of `I`, concatenating over consecutive elements.
    fn vertex(&self, n: usize, s: Subset) -> Vec<usize> {
        let e = elements_of(s);
        e.windows(2).flat_map(|w| self.pair(n, w[0], w[1]).to_vec()).collect()
    }

    fn morphism(&self, n: usize, s: Subset) -> WbarMorphism {
        let e = elements_of(s);
        let (a, b) = (e[0], *e.last().expect("non-empty"));
        let components = self
            .vertex(n, s)
            .into_iter()
            .enumerate()
            .map(|(t, v)| MonotoneMap::new(vec![v], n - (a + 1 + t)).expect("in range"))
            .collect();
        WbarMorphism { n, src: a, tgt: b, dim: 0, components }
    }

    fn monotone(&self, max_n: usize) -> bool {
        for n in 1..=max_n {
            for i in 0..n {
                for j in i + 1..=n {
                    let elems = IntervalPoset { n, i, j }.elements();
                    for &big in &elems {
                        for &small in &elems {
                            if big & small == small {
                                let (vb, vs) = (self.vertex(n, big), self.vertex(n, small));
                                if vb.iter().zip(&vs).any(|(x, y)| x > y) {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn cosimplicial(&self, maps: &[(MonotoneMap, WbarFunctor)]) -> bool {
        maps.iter().all(|(alpha, push)| {
            let (p, q) = (alpha.source_dim(), alpha.target_dim());
            (0..p).all(|a| {
                (a + 1..=p).all(|b| {
                    IntervalPoset { n: p, i: a, j: b }.elements().into_iter().all(|s| {
                        let image = push_subset(alpha, s);
                        let rhs = if image.count_ones() == 1 {
                            WbarMorphism::identity(q, alpha.apply(a), 0)
                        } else {
                            self.morphism(q, image)
                        };
                        push.apply(&self.morphism(p, s)) == rhs
                    })
                })
            })
        })
    }
}

/// Enumerates every candidate family through `max_n ≤ 3` and reports how
/// many are morphisms of cosimplicial simplicial categories.
pub fn uniqueness_by_exhaustion(max_n: usize) -> Result<UniquenessReport> {
    if max_n > 3 {
        return Err(Error::DimensionOutOfRange { requested: max_n, cap: 3 });
    }
    let slots = slots(max_n);
    let mut maps = Vec::new();
    for q in 1..=max_n {
        for i in 0..=q {
            let a = MonotoneMap::coface(q, i);
            maps.push((a.clone(), WbarFunctor::push(&a)));
        }
    }
    for q in 0..max_n {
        for i in 0..=q {
            let a = MonotoneMap::codegeneracy(q, i);
            maps.push((a.clone(), WbarFunctor::push(&a)));
        }
    }

    let choices: Vec<Vec<Vec<usize>>> = slots
        .iter()
        .map(|(_, sizes)| {
            sizes.iter().fold(vec![Vec::new()], |acc, &m| {
                acc.iter().flat_map(|p| (0..m).map(move |v| [p.clone(), vec![v]].concat())).collect()
            })
        })
        .collect();
    let mut families = 0usize;
    let mut survivors = Vec::new();
    let mut cursor = vec![0usize; slots.len()];
    loop {
        families += 1;
        let family = Family { slots: &slots, values: cursor.iter().zip(&choices).map(|(&c, ch)| ch[c].clone()).collect() };
        if family.monotone(max_n) && family.cosimplicial(&maps) {
            survivors.push(family.values.clone());
        }
        // odometer
        let mut k = 0;
        loop {
            if k == cursor.len() {
                let phi: Vec<Vec<usize>> = slots
                    .iter()
                    .map(|((_, i, j), _)| {
                        let mut v = phi_vertex(*i, *j, (1 << i) | (1 << j));
                        v.reverse();
                        v
                    })
                    .collect();
                let survivor_is_phi = survivors.len() == 1 && survivors[0] == phi;
                return Ok(UniquenessReport { max_n, families, survivors: survivors.len(), survivor_is_phi });
            }
            cursor[k] += 1;
            if cursor[k] < choices[k].len() {
                break;
            }
            cursor[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_through_two() {
        let r = uniqueness_by_exhaustion(2).unwrap();
        assert_eq!(r.families, 4);
        assert!(r.passed(), "{r:?}");
    }
}
