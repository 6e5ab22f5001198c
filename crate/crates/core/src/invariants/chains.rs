//! Normalized integral chains, homology, and mapping cones.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::snf::{smith_form, SparseMatrix};
use crate::simplicial::{SimplicialMapData, TruncatedSSet};
use crate::{Error, Result};

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub k: usize,
    pub rank: usize,
    /// Invariant factors `> 1`, each dividing the next.
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Same abstract group, ignoring the degree.
    pub fn isomorphic(&self, other: &HomologyGroup) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("ℤ".into()),
            r => parts.push(format!("ℤ^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("ℤ/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// A chain complex of free abelian groups in degrees `0..=top`. The
/// boundary `∂_k` is stored with one row per generator in degree `k` (its
/// boundary as a sparse vector over degree `k − 1`).
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    /// `boundaries[k]` for `k ≥ 1`; `boundaries[0]` is empty.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if boundaries.len() != ranks.len() {
            return Err(Error::Invariant("one boundary per degree expected".into()));
        }
        for k in 1..ranks.len() {
            let b = &boundaries[k];
            if b.rows != ranks[k] || b.cols != ranks[k - 1] {
                return Err(Error::Invariant(format!("boundary {k} has the wrong shape")));
            }
        }
        Ok(Self { ranks, boundaries })
    }

    /// Normalized chains: generators are the nondegenerate simplices, and
    /// degenerate faces contribute zero.
    pub fn normalized(sset: &TruncatedSSet, top: usize) -> Result<(Self, Vec<Vec<usize>>)> {
        if top > sset.dim_cap() {
            return Err(Error::DimensionOutOfRange { requested: top, cap: sset.dim_cap() });
        }
        let bases: Vec<Vec<usize>> = (0..=top).map(|n| sset.nondegenerate(n)).collect();
        let positions: Vec<HashMap<usize, usize>> =
            bases.iter().map(|b| b.iter().enumerate().map(|(i, &x)| (x, i)).collect()).collect();
        let mut boundaries = vec![SparseMatrix::zeros(0, 0)];
        for k in 1..=top {
            let mut m = SparseMatrix::zeros(bases[k].len(), bases[k - 1].len());
            for (row, &x) in bases[k].iter().enumerate() {
                for i in 0..=k {
                    if let Some(&col) = positions[k - 1].get(&sset.face(k, i, x)) {
                        m.add(row, col, if i % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
            boundaries.push(m);
        }
        let ranks = bases.iter().map(Vec::len).collect();
        Ok((Self { ranks, boundaries }, bases))
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, k: usize) -> usize {
        self.ranks[k]
    }

    pub fn boundary(&self, k: usize) -> &SparseMatrix {
        &self.boundaries[k]
    }

    /// Degrees `k` where `∂_{k−1} ∘ ∂_k ≠ 0`.
    pub fn square_zero_failures(&self) -> Vec<usize> {
        (2..=self.top()).filter(|&k| !self.boundaries[k].mul(&self.boundaries[k - 1]).is_zero()).collect()
    }

    /// `H_k` for `k < top` (the top degree lacks its incoming boundary).
    pub fn homology(&self, through: usize) -> Result<Vec<HomologyGroup>> {
        if through >= self.top() {
            return Err(Error::DimensionOutOfRange { requested: through, cap: self.top().saturating_sub(1) });
        }
        let forms: Vec<_> = (0..=through + 1).map(|k| if k == 0 { None } else { Some(smith_form(&self.boundaries[k])) }).collect();
        (0..=through)
            .map(|k| {
                let out_rank = forms[k].as_ref().map_or(0, |f| f.rank);
                let incoming = forms[k + 1].as_ref().expect("k + 1 ≥ 1");
                let torsion = incoming
                    .torsion
                    .iter()
                    .map(|t| u64::try_from(t).map_err(|_| Error::Invariant(format!("torsion coefficient {t} exceeds u64"))))
                    .collect::<Result<Vec<u64>>>()?;
                Ok(HomologyGroup { k, rank: self.ranks[k] - out_rank - incoming.rank, torsion })
            })
            .collect()
    }
}

/// Integral homology through degree `through ≤ N − 1` from normalized chains.
pub fn homology(sset: &TruncatedSSet, through: usize) -> Result<Vec<HomologyGroup>> {
    if through + 1 > sset.dim_cap() {
        return Err(Error::DimensionOutOfRange { requested: through, cap: sset.dim_cap().saturating_sub(1) });
    }
    if let Some(v) = sset.validate().first() {
        return Err(Error::Precondition(format!("homology needs a valid simplicial set: {v}")));
    }
    let (complex, _) = ChainComplex::normalized(sset, through + 1)?;
    complex.homology(through)
}

/// The induced map on normalized chains in degrees `0..=top`: a
/// nondegenerate simplex goes to its image, or to zero if that is degenerate.
/// Row `r` of entry `k` is the image of source generator `r`.
pub fn chain_map(f: &SimplicialMapData, top: usize) -> Result<(ChainComplex, ChainComplex, Vec<SparseMatrix>)> {
    let (cx, bx) = ChainComplex::normalized(f.source(), top)?;
    let (cy, by) = ChainComplex::normalized(f.target(), top)?;
    let maps = (0..=top)
        .map(|k| {
            let pos: HashMap<usize, usize> = by[k].iter().enumerate().map(|(i, &y)| (y, i)).collect();
            let mut m = SparseMatrix::zeros(bx[k].len(), by[k].len());
            for (r, &x) in bx[k].iter().enumerate() {
                if let Some(&c) = pos.get(&f.apply(k, x)) {
                    m.add(r, c, 1);
                }
            }
            m
        })
        .collect();
    Ok((cx, cy, maps))
}

/// Mapping cone: `Cone_k = X_{k−1} ⊕ Y_k`, `∂(x, y) = (−∂x, f x + ∂y)`.
pub fn mapping_cone(x: &ChainComplex, y: &ChainComplex, f: &[SparseMatrix]) -> Result<ChainComplex> {
    let top = x.top().min(y.top());
    let rank = |k: usize| if k == 0 { y.rank(0) } else { x.rank(k - 1) + y.rank(k) };
    let ranks: Vec<usize> = (0..=top).map(rank).collect();
    let mut boundaries = vec![SparseMatrix::zeros(0, 0)];
    for k in 1..=top {
        let mut m = SparseMatrix::zeros(ranks[k], ranks[k - 1]);
        // target layout in degree k − 1: X_{k−2} first (when k ≥ 2), then Y_{k−1}
        let y_offset_below = if k >= 2 { x.rank(k - 2) } else { 0 };
        // generators from X_{k−1}
        for r in 0..x.rank(k - 1) {
            if k >= 2 {
                for (&c, &v) in &x.boundary(k - 1).entries[r] {
                    m.add(r, c, -v);
                }
            }
            for (&c, &v) in &f[k - 1].entries[r] {
                m.add(r, y_offset_below + c, v);
            }
        }
        // generators from Y_k
        let y_offset_here = x.rank(k - 1);
        for r in 0..y.rank(k) {
            for (&c, &v) in &y.boundary(k).entries[r] {
                m.add(y_offset_here + r, y_offset_below + c, v);
            }
        }
        boundaries.push(m);
    }
    ChainComplex::new(ranks, boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::classical::{category_nerve, standard_simplex, FiniteCategory};

    #[test]
    fn simplex_is_acyclic() {
        let d2 = standard_simplex(2, 3).unwrap();
        let h = homology(&d2, 2).unwrap();
        assert_eq!(h[0], HomologyGroup { k: 0, rank: 1, torsion: vec![] });
        assert!(h[1].is_zero() && h[2].is_zero());
    }

    #[test]
    fn discrete_two_points() {
        let pairs = [(0, 0), (1, 1)];
        let points = category_nerve(&FiniteCategory::from_relation(2, &pairs), 2).unwrap();
        assert_eq!(homology(&points, 1).unwrap()[0].rank, 2);
    }

    #[test]
    fn square_zero_on_simplices() {
        let d3 = standard_simplex(3, 4).unwrap();
        let (c, _) = ChainComplex::normalized(&d3, 4).unwrap();
        assert!(c.square_zero_failures().is_empty());
    }

    #[test]
    fn refuses_top_degree() {
        let d1 = standard_simplex(1, 2).unwrap();
        assert!(homology(&d1, 2).is_err());
        assert!(homology(&d1, 1).is_ok());
    }

    #[test]
    fn display() {
        let h = HomologyGroup { k: 1, rank: 1, torsion: vec![2] };
        assert_eq!(h.to_string(), "ℤ ⊕ ℤ/2");
        assert_eq!(HomologyGroup { k: 2, rank: 0, torsion: vec![] }.to_string(), "0");
    }
}
