//! The interval posets `P_{i,j}` and the cosimplicial simplicial category
//! `C̃[Δ•]` whose hom spaces are their opposite nerves.
//!
//! Subsets of `[0, n]` are bitmasks. A `k`-simplex of `N(P_{i,j}^op)` is a
//! chain `I₀ ⊇ I₁ ⊇ ⋯ ⊇ I_k`; it is nondegenerate when the inclusions are strict.

use crate::simplicial::classical::{category_nerve, FiniteCategory};
use crate::simplicial::{MonotoneMap, TruncatedSSet};
use crate::{Error, Result};

pub type Subset = u32;

/// Largest `n` for which `C̃[Δⁿ]` is materialized.
pub const MAX_DIM: usize = 8;

pub fn singleton(a: usize) -> Subset {
    1 << a
}

pub fn elements_of(s: Subset) -> Vec<usize> {
    (0..32).filter(|&e| s & (1 << e) != 0).collect()
}

pub fn min_of(s: Subset) -> usize {
    s.trailing_zeros() as usize
}

pub fn max_of(s: Subset) -> usize {
    31 - s.leading_zeros() as usize
}

/// Elements of `[lo, hi]` as a mask.
pub fn range_mask(lo: usize, hi: usize) -> Subset {
    if lo > hi {
        return 0;
    }
    let upper = if hi >= 31 { u32::MAX } else { (1u32 << (hi + 1)) - 1 };
    upper & !((1u32 << lo) - 1)
}

/// The poset `P_{i,j}` of subsets of `[i, j]` containing both endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntervalPoset {
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl IntervalPoset {
    pub fn new(n: usize, i: usize, j: usize) -> Result<Self> {
        if i > j || j > n || n > MAX_DIM {
            return Err(Error::DimensionOutOfRange { requested: j.max(n), cap: MAX_DIM });
        }
        Ok(Self { n, i, j })
    }

    /// Elements in increasing numeric order of their masks.
    pub fn elements(&self) -> Vec<Subset> {
        let ends = singleton(self.i) | singleton(self.j);
        if self.i == self.j {
            return vec![ends];
        }
        let interior = range_mask(self.i + 1, self.j - 1);
        let mut out: Vec<Subset> = Vec::new();
        // enumerate submasks of the interior
        let mut sub = interior;
        loop {
            out.push(ends | sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & interior;
        }
        out.sort_unstable();
        out
    }

    pub fn len(&self) -> usize {
        if self.i == self.j {
            1
        } else {
            1 << (self.j - self.i - 1)
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Strict chains `I₀ ⊋ ⋯ ⊋ I_k`, ordered by `k` and then
    /// lexicographically.
    pub fn strict_chains(&self) -> Vec<Vec<Subset>> {
        let elems = self.elements();
        let mut out: Vec<Vec<Subset>> = elems.iter().map(|&e| vec![e]).collect();
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in &frontier {
                let last = *c.last().expect("non-empty");
                for &e in &elems {
                    if e != last && e & last == e {
                        let mut d = c.clone();
                        d.push(e);
                        next.push(d);
                    }
                }
            }
            next.sort_unstable();
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// `N(P_{i,j}^op)` as a truncated simplicial set; vertices follow
    /// [`IntervalPoset::elements`].
    pub fn nerve(&self, dim_cap: usize) -> Result<TruncatedSSet> {
        let elems = self.elements();
        let pairs: Vec<(usize, usize)> = (0..elems.len())
            .flat_map(|a| (0..elems.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| elems[a] & elems[b] == elems[b])
            .collect();
        category_nerve(&FiniteCategory::from_relation(elems.len(), &pairs), dim_cap)
    }
}

pub fn is_strict(chain: &[Subset]) -> bool {
    chain.windows(2).all(|w| w[0] != w[1] && w[0] & w[1] == w[1])
}

pub fn is_weak(chain: &[Subset]) -> bool {
    chain.windows(2).all(|w| w[0] & w[1] == w[1])
}

pub fn first_repeat(chain: &[Subset]) -> Option<usize> {
    chain.windows(2).position(|w| w[0] == w[1])
}

/// `I ↦ I ∩ [lo, hi]` applied to every set of the chain.
pub fn restrict(chain: &[Subset], lo: usize, hi: usize) -> Vec<Subset> {
    let m = range_mask(lo, hi);
    chain.iter().map(|&s| s & m).collect()
}

/// Smallest element of the last set strictly between its endpoints, if any.
/// Every set of the chain contains it.
pub fn split_point(chain: &[Subset]) -> Option<usize> {
    let last = *chain.last()?;
    let (a, b) = (min_of(last), max_of(last));
    (a + 1..b).find(|&e| last & (1 << e) != 0)
}

/// Composition in `C̃[Δⁿ]`: elementwise union.
pub fn compose_chains(later: &[Subset], earlier: &[Subset]) -> Vec<Subset> {
    assert_eq!(later.len(), earlier.len());
    later.iter().zip(earlier).map(|(a, b)| a | b).collect()
}

/// The image of a subset under a monotone map.
pub fn push_subset(alpha: &MonotoneMap, s: Subset) -> Subset {
    elements_of(s).into_iter().fold(0, |acc, e| acc | singleton(alpha.apply(e)))
}

/// `α_*` on a chain of `N(P_{i,j}^op)`, landing in `N(P_{α(i),α(j)}^op)`.
pub fn alpha_push(alpha: &MonotoneMap, chain: &[Subset]) -> Vec<Subset> {
    chain.iter().map(|&s| push_subset(alpha, s)).collect()
}

/// Nondegenerate simplices of `N(P_{a,m}^op) × N(P_{m,b}^op)` as pairs of
/// equally long chains with no common repetition.
pub fn product_simplices(n: usize, a: usize, m: usize, b: usize) -> Result<Vec<(Vec<Subset>, Vec<Subset>)>> {
    let left = IntervalPoset::new(n, a, m)?.strict_chains();
    let right = IntervalPoset::new(n, m, b)?.strict_chains();
    let mut out = Vec::new();
    for x in &left {
        for y in &right {
            let (p, q) = (x.len() - 1, y.len() - 1);
            for k in p.max(q)..=p + q {
                let onto = |t: usize| MonotoneMap::all(k, t).into_iter().filter(move |m| (0..=t).all(|v| m.values().contains(&v)));
                let thetas: Vec<MonotoneMap> = onto(p).collect();
                let psis: Vec<MonotoneMap> = onto(q).collect();
                for th in &thetas {
                    for ps in &psis {
                        let shared = (0..k).any(|t| th.apply(t) == th.apply(t + 1) && ps.apply(t) == ps.apply(t + 1));
                        if !shared {
                            let u = (0..=k).map(|t| x[th.apply(t)]).collect();
                            let v = (0..=k).map(|t| y[ps.apply(t)]).collect();
                            out.push((u, v));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `C̃[Δⁿ]`: objects `0..=n`, hom spaces the opposite nerves of `P_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CTildeCat {
    pub n: usize,
}

impl CTildeCat {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_DIM {
            return Err(Error::DimensionOutOfRange { requested: n, cap: MAX_DIM });
        }
        Ok(Self { n })
    }

    /// `None` when `i > j`: the hom space is empty.
    pub fn hom(&self, i: usize, j: usize) -> Option<IntervalPoset> {
        (i <= j && j <= self.n).then_some(IntervalPoset { n: self.n, i, j })
    }

    /// Every nondegenerate chain of every hom space with `i < j`, in a fixed
    /// order: by `j − i`, then `i`, then chain order.
    pub fn nondegenerate_chains(&self) -> Vec<Vec<Subset>> {
        let mut out = Vec::new();
        for len in 1..=self.n {
            for i in 0..=self.n - len {
                out.extend(IntervalPoset { n: self.n, i, j: i + len }.strict_chains());
            }
        }
        out
    }
}
