//! Ordinary nerves of finite categories, used for standard simplices, posets
//! and as the reference shape for classifying spaces of discrete groupoids.

use super::sset::{assemble, TruncatedSSet};
use crate::{Error, Result};

/// A finite category given by explicit tables.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    pub objects: usize,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub identity: Vec<usize>,
    /// `compose[g][f] = g ∘ f` when `src g = tgt f`.
    pub compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    /// The poset `[n]` viewed as a category; the arrow `a ≤ b` is numbered in
    /// lexicographic order of `(a, b)`.
    pub fn ordinal(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..=n).flat_map(|a| (a..=n).map(move |b| (a, b))).collect();
        Self::from_relation(n + 1, &pairs)
    }

    /// The category of a finite preorder given as the list of pairs `a ≤ b`
    /// (must be reflexive and transitive).
    pub fn from_relation(objects: usize, pairs: &[(usize, usize)]) -> Self {
        let src: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let tgt: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        let find = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b));
        let identity = (0..objects).map(|x| find(x, x).expect("relation is reflexive")).collect();
        let compose = pairs
            .iter()
            .map(|&(b, c)| pairs.iter().map(|&(a, b2)| if b == b2 { Some(find(a, c).expect("transitive")) } else { None }).collect())
            .collect();
        FiniteCategory { objects, src, tgt, identity, compose }
    }

    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    /// Checks unit and associativity laws.
    pub fn check(&self) -> Result<()> {
        let m = self.arrows();
        for f in 0..m {
            if self.compose[self.identity[self.tgt[f]]][f] != Some(f) || self.compose[f][self.identity[self.src[f]]] != Some(f) {
                return Err(Error::Invariant(format!("unit law fails at arrow {f}")));
            }
            for g in 0..m {
                let gf = self.compose[g][f];
                if gf.is_some() != (self.src[g] == self.tgt[f]) {
                    return Err(Error::Invariant(format!("composability mismatch at ({g}, {f})")));
                }
                let Some(gf) = gf else { continue };
                if self.src[gf] != self.src[f] || self.tgt[gf] != self.tgt[g] {
                    return Err(Error::Invariant(format!("composite of ({g}, {f}) has wrong ends")));
                }
                for h in 0..m {
                    if let Some(hg) = self.compose[h][g] {
                        if self.compose[hg][f] != self.compose[h][gf] {
                            return Err(Error::Invariant(format!("associativity fails at ({h}, {g}, {f})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// An `n`-simplex of the nerve: a start object and `n` composable arrows
/// `x₀ → x₁ → ⋯ → x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Chain {
    pub fn vertex(&self, cat: &FiniteCategory, k: usize) -> usize {
        if k == 0 {
            self.start
        } else {
            cat.tgt[self.arrows[k - 1]]
        }
    }
}

/// All `n`-chains of the category in lexicographic order.
pub fn chains(cat: &FiniteCategory, n: usize) -> Vec<Chain> {
    let mut out: Vec<Chain> = (0..cat.objects).map(|x| Chain { start: x, arrows: Vec::new() }).collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for c in &out {
            let end = c.vertex(cat, c.arrows.len());
            for f in (0..cat.arrows()).filter(|&f| cat.src[f] == end) {
                let mut arrows = c.arrows.clone();
                arrows.push(f);
                next.push(Chain { start: c.start, arrows });
            }
        }
        out = next;
    }
    out
}

pub fn face_of_chain(cat: &FiniteCategory, c: &Chain, i: usize) -> Chain {
    let n = c.arrows.len();
    let mut arrows = c.arrows.clone();
    let mut start = c.start;
    if i == 0 {
        start = cat.tgt[arrows[0]];
        arrows.remove(0);
    } else if i == n {
        arrows.pop();
    } else {
        let composite = cat.compose[arrows[i]][arrows[i - 1]].expect("chain is composable");
        arrows.splice(i - 1..=i, [composite]);
    }
    Chain { start, arrows }
}

pub fn degeneracy_of_chain(cat: &FiniteCategory, c: &Chain, i: usize) -> Chain {
    let mut arrows = c.arrows.clone();
    arrows.insert(i, cat.identity[c.vertex(cat, i)]);
    Chain { start: c.start, arrows }
}

/// Nerve of a finite category truncated at `dim_cap`. Simplices are numbered
/// in lexicographic order of `(start, arrows)`.
pub fn category_nerve(cat: &FiniteCategory, dim_cap: usize) -> Result<TruncatedSSet> {
    let levels: Vec<Vec<Chain>> = (0..=dim_cap).map(|n| chains(cat, n)).collect();
    assemble(
        &levels,
        Chain::clone,
        |_, i, c| face_of_chain(cat, c, i),
        |_, i, c| degeneracy_of_chain(cat, c, i),
        |c| format!("{}:{:?}", c.start, c.arrows),
    )
}

/// The standard simplex `Δⁿ` truncated at `dim_cap`.
pub fn standard_simplex(n: usize, dim_cap: usize) -> Result<TruncatedSSet> {
    category_nerve(&FiniteCategory::ordinal(n), dim_cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_two_counts() {
        // k-simplices of Δ² are monotone [k] → [2]: C(k+3, 2)
        let d2 = standard_simplex(2, 3).unwrap();
        assert_eq!(d2.counts(), &[3, 6, 10, 15]);
        assert!(d2.validate().is_empty());
        assert_eq!(d2.nondegenerate(2).len(), 1);
        assert!(d2.nondegenerate(3).is_empty());
    }

    #[test]
    fn ordinal_category_is_lawful() {
        FiniteCategory::ordinal(3).check().unwrap();
    }
}
