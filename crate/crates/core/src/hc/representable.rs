//! `W̄𝒢` rebuilt as the simplicial set of functors `Δⁿ_W̄ → 𝒢`, with the
//! structure maps computed by precomposing with `∂_i` and `σ_i`. Matching it
//! against the tuple description is an independent check of both.

use super::delta_wbar::WbarFunctor;
use crate::groups::SimplicialGroupoid;
use crate::simplicial::{assemble, SimplicialMapData, TruncatedSSet};
use crate::wbar::{build_wbar, wbar_simplices, WBarSimplex};
use crate::{Error, Result};

/// A functor `Δⁿ_W̄ → 𝒢`: objects `x_0..=x_n` and generator images
/// `gens[l − 1] ∈ 𝒢_{n−l}(x_{l−1}, x_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepresentedSimplex {
    pub objects: Vec<usize>,
    pub gens: Vec<usize>,
}

impl RepresentedSimplex {
    pub fn precompose(&self, g: &SimplicialGroupoid, f: &WbarFunctor) -> RepresentedSimplex {
        RepresentedSimplex {
            objects: f.objects.iter().map(|&o| self.objects[o]).collect(),
            gens: f.generators.iter().map(|m| m.evaluate(g, &self.objects, &self.gens)).collect(),
        }
    }

    /// The tuple with `g_j = f_{n−j}`.
    pub fn to_tuple(&self) -> WBarSimplex {
        WBarSimplex { objects: self.objects.clone(), arrows: self.gens.iter().rev().copied().collect() }
    }

    pub fn from_tuple(s: &WBarSimplex) -> Self {
        Self { objects: s.objects.clone(), gens: s.arrows.iter().rev().copied().collect() }
    }

    fn label(&self) -> String {
        format!("{:?}|{:?}", self.objects, self.gens)
    }
}

/// All functors `Δⁿ_W̄ → 𝒢`, enumerated directly from their definition: an
/// object per vertex and a degree-`(n − l)` arrow `x_{l−1} → x_l` per generator.
pub fn represented_simplices(g: &SimplicialGroupoid, n: usize) -> Vec<RepresentedSimplex> {
    let mut partial: Vec<RepresentedSimplex> =
        (0..g.objects()).map(|x| RepresentedSimplex { objects: vec![x], gens: Vec::new() }).collect();
    for l in 1..=n {
        let mut next = Vec::new();
        for p in &partial {
            let from = p.objects[l - 1];
            for f in (0..g.arrows(n - l)).filter(|&f| g.src(n - l, f) == from) {
                let mut q = p.clone();
                q.objects.push(g.tgt(n - l, f));
                q.gens.push(f);
                next.push(q);
            }
        }
        partial = next;
    }
    partial.sort_unstable();
    partial
}

/// `W̄𝒢` as a representable functor, together with the comparison to the
/// tuple construction. The returned map goes from the representable side to
/// [`build_wbar`].
pub fn wbar_via_representable(g: &SimplicialGroupoid, dim_cap: usize) -> Result<(TruncatedSSet, SimplicialMapData)> {
    if dim_cap > g.dim_cap() {
        return Err(Error::Truncated { needed: dim_cap, cap: g.dim_cap() });
    }
    let levels: Vec<Vec<RepresentedSimplex>> = (0..=dim_cap).map(|n| represented_simplices(g, n)).collect();
    let rep = assemble(
        &levels,
        RepresentedSimplex::clone,
        |n, i, s| s.precompose(g, &WbarFunctor::coface(n, i)),
        |n, i, s| s.precompose(g, &WbarFunctor::codegeneracy(n, i)),
        RepresentedSimplex::label,
    )?;
    let tuples = build_wbar(g, dim_cap)?;
    let assignment = (0..=dim_cap)
        .map(|n| {
            let index: std::collections::HashMap<WBarSimplex, usize> =
                wbar_simplices(g, n).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
            levels[n]
                .iter()
                .map(|s| {
                    index.get(&s.to_tuple()).copied().ok_or_else(|| Error::Invariant(format!("{s:?} has no tuple counterpart")))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let map = SimplicialMapData::new(rep.clone(), tuples, assignment)?;
    Ok((rep, map))
}
