//! Monotone maps `[p] → [q]` of the simplex category and their factorization
//! into elementary cofaces and codegeneracies.

use crate::{Error, Result};

/// A monotone map `[p] → [q]`, stored as its list of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    values: Vec<usize>,
    target: usize,
}

/// One cosimplicial generator. `Coface { i, dim }` is `δ_i : [dim−1] → [dim]`
/// and `Codegeneracy { i, dim }` is `σ_i : [dim+1] → [dim]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Elementary {
    Coface { i: usize, dim: usize },
    Codegeneracy { i: usize, dim: usize },
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parse { what: "monotone map", input: "[]".into() });
        }
        if values.windows(2).any(|w| w[0] > w[1]) || values.iter().any(|&v| v > target) {
            return Err(Error::Parse {
                what: "monotone map",
                input: format!("{values:?} into [{target}]"),
            });
        }
        Ok(Self { values, target })
    }

    pub fn identity(n: usize) -> Self {
        Self { values: (0..=n).collect(), target: n }
    }

    /// `δ_i : [n−1] → [n]`, skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "coface δ_{i} into [{n}] out of range");
        let values = (0..n).map(|v| if v < i { v } else { v + 1 }).collect();
        Self { values, target: n }
    }

    /// `σ_i : [n+1] → [n]`, hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "codegeneracy σ_{i} onto [{n}] out of range");
        let values = (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect();
        Self { values, target: n }
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, v: usize) -> usize {
        self.values[v]
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source_dim() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &MonotoneMap) -> MonotoneMap {
        assert_eq!(first.target, self.source_dim(), "composing non-composable monotone maps");
        MonotoneMap { values: first.values.iter().map(|&v| self.values[v]).collect(), target: self.target }
    }

    /// All monotone maps `[p] → [q]` in lexicographic order.
    pub fn all(p: usize, q: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p + 1);
        fn rec(p: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
            if cur.len() == p + 1 {
                out.push(MonotoneMap { values: cur.clone(), target: q });
                return;
            }
            let lo = cur.last().copied().unwrap_or(0);
            for v in lo..=q {
                cur.push(v);
                rec(p, q, cur, out);
                cur.pop();
            }
        }
        rec(p, q, &mut cur, &mut out);
        out
    }

    /// Writes `self = e_r ∘ ⋯ ∘ e_1` with codegeneracies first and cofaces
    /// last; the returned list is in application order `e_1, …, e_r`.
    pub fn decompose(&self) -> Vec<Elementary> {
        let mut steps = Vec::new();
        let mut epi = self.values.clone();
        while let Some(t) = (0..epi.len().saturating_sub(1)).find(|&t| epi[t] == epi[t + 1]) {
            steps.push(Elementary::Codegeneracy { i: t, dim: epi.len() - 2 });
            epi.remove(t + 1);
        }
        // epi is now injective; peel off the largest missing value each time.
        let mut mono = epi;
        let mut target = self.target;
        let mut faces = Vec::new();
        while mono.len() < target + 1 {
            let missing = (0..=target).rev().find(|v| !mono.contains(v)).expect("injective map misses a value");
            faces.push(Elementary::Coface { i: missing, dim: target });
            for v in mono.iter_mut() {
                if *v > missing {
                    *v -= 1;
                }
            }
            target -= 1;
        }
        steps.extend(faces.into_iter().rev());
        steps
    }
}

impl Elementary {
    pub fn as_map(self) -> MonotoneMap {
        match self {
            Elementary::Coface { i, dim } => MonotoneMap::coface(dim, i),
            Elementary::Codegeneracy { i, dim } => MonotoneMap::codegeneracy(dim, i),
        }
    }
}

/// Anything carrying face and degeneracy operators on densely numbered
/// elements per level.
pub trait SimplicialOps {
    fn face(&self, n: usize, i: usize, x: usize) -> usize;
    fn degen(&self, n: usize, i: usize, x: usize) -> usize;

    /// `θ^* x` for an `n`-element `x` and a monotone `θ : [k] → [n]`.
    fn act(&self, x: usize, theta: &MonotoneMap) -> usize {
        let mut cur = x;
        for step in theta.decompose().into_iter().rev() {
            cur = match step {
                Elementary::Coface { i, dim } => self.face(dim, i, cur),
                Elementary::Codegeneracy { i, dim } => self.degen(dim, i, cur),
            };
        }
        cur
    }
}
