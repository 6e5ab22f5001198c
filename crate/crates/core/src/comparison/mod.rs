//! The identity-on-objects morphism `φ : C̃[Δ•] → Δ•_W̄` and the comparison
//! map `W̄𝒢 → N𝒢` it induces by precomposition.
//!
//! On a subset `I ∈ P_{i,j}`, the coordinate of `φ(I)` at generator `l` is
//! the gap from `l` up to the next element of `I`. Chains go vertexwise.

pub mod uniqueness;

use serde::{Deserialize, Serialize};

use crate::groups::SimplicialGroupoid;
use crate::hc::nerve::{build_nerve_data, ChainTable, HcFunctor, HcNerve, DEFAULT_BUDGET};
use crate::hc::poset::{alpha_push, max_of, min_of, product_simplices, IntervalPoset, Subset};
use crate::hc::representable::RepresentedSimplex;
use crate::hc::{WbarFunctor, WbarMorphism};
use crate::simplicial::{MonotoneMap, SimplicialMapData, TruncatedSSet};
use crate::wbar::{build_wbar, wbar_simplices};
use crate::{Error, Result};

pub use uniqueness::{uniqueness_by_exhaustion, UniquenessReport};

/// The coordinate of `φ(I)` at generator `l`: `min{e ∈ I : e ≥ l} − l`.
fn gap(s: Subset, l: usize) -> usize {
    let above = s & !((1u32 << l) - 1);
    above.trailing_zeros() as usize - l
}

/// `φ` on a vertex `I ∈ P_{i,j}`, listed by factor `[n−j], …, [n−i−1]`
/// (generators `j` down to `i + 1`).
pub fn phi_vertex(i: usize, j: usize, s: Subset) -> Vec<usize> {
    (i + 1..=j).rev().map(|l| gap(s, l)).collect()
}

/// `φₙ` on a chain `I₀ ⊇ ⋯ ⊇ I_k` of `P_{a,b}` (weak chains allowed).
pub fn phi_morphism(n: usize, chain: &[Subset]) -> WbarMorphism {
    let (a, b) = (min_of(chain[0]), max_of(chain[0]));
    let components = (a + 1..=b)
        .map(|l| {
            let values = chain.iter().map(|&s| gap(s, l)).collect();
            MonotoneMap::new(values, n - l).expect("gaps are monotone and bounded")
        })
        .collect();
    WbarMorphism { n, src: a, tgt: b, dim: chain.len() - 1, components }
}

/// The vertex `ι_*(φ₁({0,1}))` for `ι : [1] → [n]`, `0 ↦ i`, `1 ↦ j`, in
/// factor order. Computed through `Δ•_W̄` only, without `φₙ`.
pub fn iota_vertex(n: usize, i: usize, j: usize) -> Result<Vec<usize>> {
    if i > j || j > n {
        return Err(Error::DimensionOutOfRange { requested: j, cap: n });
    }
    let iota = MonotoneMap::new(vec![i, j], n)?;
    let unit = WbarMorphism::generator(1, 1, MonotoneMap::identity(0));
    let image = WbarFunctor::push(&iota).apply(&unit);
    let mut v = image.vertex(0);
    v.reverse();
    Ok(v)
}

/// Failures of `φₙ` being a simplicial functor: monotone on hom posets,
/// compatible with faces, and sending unions to composites.
pub fn phi_functor_failures(n: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            let p = IntervalPoset::new(n, i, j)?;
            for c in p.strict_chains() {
                let m = phi_morphism(n, &c);
                if !m.check() {
                    out.push(format!("φ_{n}({c:?}) is ill-formed"));
                }
                for t in 0..c.len().saturating_sub(1) {
                    let (hi, lo) = (phi_vertex(i, j, c[t]), phi_vertex(i, j, c[t + 1]));
                    if hi.iter().zip(&lo).any(|(x, y)| x > y) {
                        out.push(format!("φ_{n} is not monotone on {:?} ⊇ {:?}", c[t], c[t + 1]));
                    }
                }
                let k = c.len() - 1;
                for f in (0..=k).filter(|_| k > 0) {
                    let mut face = c.clone();
                    face.remove(f);
                    if phi_morphism(n, &face) != m.restrict(&MonotoneMap::coface(k, f)) {
                        out.push(format!("φ_{n} does not commute with face {f} of {c:?}"));
                    }
                }
            }
        }
    }
    for a in 0..=n {
        for b in a + 2..=n {
            for mid in a + 1..b {
                for (u, v) in product_simplices(n, a, mid, b)? {
                    let whole: Vec<Subset> = u.iter().zip(&v).map(|(x, y)| x | y).collect();
                    if phi_morphism(n, &whole) != phi_morphism(n, &u).then(&phi_morphism(n, &v)) {
                        out.push(format!("φ_{n} does not preserve the composite of {u:?} and {v:?}"));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `φ₁` is the identity of `[1]`: its one hom space is a point sent to the
/// unit generator.
pub fn phi_one_is_identity() -> bool {
    phi_morphism(1, &[0b11]) == WbarMorphism::generator(1, 1, MonotoneMap::identity(0))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaturalityReport {
    pub maps_checked: usize,
    pub chains_checked: usize,
    pub failures: Vec<String>,
}

impl NaturalityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `α_* ∘ φ_p = φ_q ∘ α_*` for every monotone `α : [p] → [q]` with
/// `p ≤ max_p`, `q ≤ max_q`, on every nondegenerate chain of every hom space.
pub fn check_naturality(max_p: usize, max_q: usize) -> Result<NaturalityReport> {
    let mut report = NaturalityReport::default();
    for p in 0..=max_p {
        let chains: Vec<Vec<Subset>> = (0..=p)
            .flat_map(|i| (i..=p).map(move |j| (i, j)))
            .map(|(i, j)| IntervalPoset::new(p, i, j).map(|ip| ip.strict_chains()))
            .collect::<Result<Vec<_>>>()?
            .concat();
        for q in 0..=max_q {
            for alpha in MonotoneMap::all(p, q) {
                report.maps_checked += 1;
                let push = WbarFunctor::push(&alpha);
                for c in &chains {
                    report.chains_checked += 1;
                    let lhs = push.apply(&phi_morphism(p, c));
                    let rhs = phi_morphism(q, &alpha_push(&alpha, c));
                    if lhs != rhs {
                        report.failures.push(format!("α = {:?}, chain {c:?}", alpha.values()));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `W̄𝒢`, `N𝒢` and the comparison map between them.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub wbar: TruncatedSSet,
    pub nerve: HcNerve,
    pub map: SimplicialMapData,
}

/// The image of a `W̄`-simplex: the functor `F ∘ φₙ`.
pub fn phi_pullback(g: &SimplicialGroupoid, simplex: &RepresentedSimplex, table: &ChainTable) -> HcFunctor {
    let n = table.n;
    let values = table.chains.iter().map(|c| phi_morphism(n, c).evaluate(g, &simplex.objects, &simplex.gens)).collect();
    HcFunctor { objects: simplex.objects.clone(), values }
}

pub fn induced_map(g: &SimplicialGroupoid, dim_cap: usize) -> Result<Comparison> {
    induced_map_with_budget(g, dim_cap, DEFAULT_BUDGET)
}

/// Builds both sides and the levelwise map `F ↦ F ∘ φₙ`. Each image must be
/// one of the enumerated functors.
pub fn induced_map_with_budget(g: &SimplicialGroupoid, dim_cap: usize, budget: u64) -> Result<Comparison> {
    let wbar = build_wbar(g, dim_cap)?;
    let nerve = build_nerve_data(g, dim_cap, budget)?;
    let assignment = (0..=dim_cap)
        .map(|n| {
            wbar_simplices(g, n)
                .iter()
                .map(|s| {
                    let image = phi_pullback(g, &RepresentedSimplex::from_tuple(s), &nerve.tables[n]);
                    nerve.index_of(&image).ok_or_else(|| {
                        Error::Invariant(format!("image of {} is not a functor out of C̃[Δ^{n}]", s.label()))
                    })
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let map = SimplicialMapData::new(wbar.clone(), nerve.sset.clone(), assignment)?;
    Ok(Comparison { wbar, nerve, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    #[test]
    fn vertex_examples() {
        assert_eq!(phi_vertex(0, 2, 0b101), vec![0, 1]);
        assert_eq!(phi_vertex(0, 2, 0b111), vec![0, 0]);
        assert_eq!(phi_vertex(1, 1, 0b10), Vec::<usize>::new());
    }

    #[test]
    fn functor_laws_through_four() {
        for n in 0..=4 {
            assert_eq!(phi_functor_failures(n).unwrap(), Vec::<String>::new(), "n = {n}");
        }
        assert!(phi_one_is_identity());
    }

    #[test]
    fn naturality_small() {
        assert!(check_naturality(2, 2).unwrap().passed());
    }

    #[test]
    fn comparison_is_simplicial_for_c2() {
        let g = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2).unwrap(), 3);
        let c = induced_map(&g, 3).unwrap();
        assert!(c.map.validate().is_empty());
        assert!(c.map.is_levelwise_bijective());
    }
}
