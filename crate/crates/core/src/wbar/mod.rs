//! The `W̄` classifying space of a simplicial groupoid and, for simplicial
//! groups, the total space `W` of the universal principal fibration.

pub mod total;

use crate::groups::SimplicialGroupoid;
use crate::simplicial::classical::{category_nerve, Chain, FiniteCategory};
use crate::simplicial::{assemble, SimplicialMapData, SimplicialOps, TruncatedSSet};
use crate::{Error, Result};

pub use total::{build_w_total, check_principal_fibration, FibrationReport, TotalSpace, TwistConvention, TWIST};

/// An `n`-simplex `x_n ← x_{n−1} ← ⋯ ← x_0` of `W̄𝒢`. Entry `j` of `arrows`
/// is a degree-`j` arrow `x_{n−j−1} → x_{n−j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WBarSimplex {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

impl WBarSimplex {
    pub fn dim(&self) -> usize {
        self.arrows.len()
    }

    /// Checks the object chain against the arrow endpoints.
    pub fn check(&self, g: &SimplicialGroupoid) -> Result<()> {
        let n = self.dim();
        if self.objects.len() != n + 1 {
            return Err(Error::Invariant(format!("{n}-simplex carries {} objects", self.objects.len())));
        }
        for (j, &a) in self.arrows.iter().enumerate() {
            if a >= g.arrows(j) || g.src(j, a) != self.objects[n - j - 1] || g.tgt(j, a) != self.objects[n - j] {
                return Err(Error::Invariant(format!("arrow {j} of {self:?} does not fit the object chain")));
            }
        }
        Ok(())
    }

    pub fn face(&self, g: &SimplicialGroupoid, i: usize) -> WBarSimplex {
        let n = self.dim();
        assert!(n >= 1 && i <= n);
        let a = &self.arrows;
        let mut objects = self.objects.clone();
        objects.remove(i);
        let arrows = if i == 0 {
            a[..n - 1].to_vec()
        } else if i == n {
            (1..n).map(|j| g.face(j, j, a[j])).collect()
        } else {
            let mut out = a[..n - i - 1].to_vec();
            let pivot = n - i - 1;
            out.push(g.compose(pivot, a[pivot], g.face(pivot + 1, 0, a[pivot + 1])));
            out.extend((1..i).map(|k| g.face(n - i + k, k, a[n - i + k])));
            out
        };
        WBarSimplex { objects, arrows }
    }

    pub fn degeneracy(&self, g: &SimplicialGroupoid, i: usize) -> WBarSimplex {
        let n = self.dim();
        assert!(i <= n);
        let a = &self.arrows;
        let mut objects = self.objects.clone();
        objects.insert(i, self.objects[i]);
        let mut arrows = a[..n - i].to_vec();
        arrows.push(g.identity(n - i, self.objects[i]));
        arrows.extend((0..i).map(|k| g.degen(n - i + k, k, a[n - i + k])));
        WBarSimplex { objects, arrows }
    }

    pub fn label(&self) -> String {
        let objs: Vec<String> = self.objects.iter().map(usize::to_string).collect();
        let arrs: Vec<String> = self.arrows.iter().map(usize::to_string).collect();
        format!("{}|{}", objs.join(","), arrs.join(","))
    }
}

/// All `n`-simplices in lexicographic order of the arrow tuple (objects
/// first when `n = 0`).
pub fn wbar_simplices(g: &SimplicialGroupoid, n: usize) -> Vec<WBarSimplex> {
    if n == 0 {
        return (0..g.objects()).map(|x| WBarSimplex { objects: vec![x], arrows: Vec::new() }).collect();
    }
    // Extend from g_0 towards g_{n−1}; each new arrow ends where the previous one starts.
    let mut partial: Vec<Vec<usize>> = (0..g.arrows(0)).map(|a| vec![a]).collect();
    for j in 1..n {
        let mut next = Vec::new();
        for p in &partial {
            let want = g.src(j - 1, p[j - 1]);
            for a in (0..g.arrows(j)).filter(|&a| g.tgt(j, a) == want) {
                let mut q = p.clone();
                q.push(a);
                next.push(q);
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|arrows| {
            let mut objects = vec![g.src(n - 1, arrows[n - 1])];
            objects.extend((0..n).rev().map(|j| g.tgt(j, arrows[j])));
            WBarSimplex { objects, arrows }
        })
        .collect()
}

/// Materializes `W̄𝒢` on levels `0..=dim_cap`. Asks for `𝒢` through degree
/// `dim_cap`, the same footing the total space needs.
pub fn build_wbar(g: &SimplicialGroupoid, dim_cap: usize) -> Result<TruncatedSSet> {
    if dim_cap > g.dim_cap() {
        return Err(Error::Truncated { needed: dim_cap, cap: g.dim_cap() });
    }
    let levels: Vec<Vec<WBarSimplex>> = (0..=dim_cap).map(|n| wbar_simplices(g, n)).collect();
    for lvl in &levels {
        for s in lvl {
            s.check(g)?;
        }
    }
    assemble(&levels, WBarSimplex::clone, |_, i, s| s.face(g, i), |_, i, s| s.degeneracy(g, i), WBarSimplex::label)
}

/// `true` when every level equals level 0 and all structure maps are identities.
pub fn is_constant(g: &SimplicialGroupoid) -> bool {
    let base = g.level(0);
    (1..=g.dim_cap()).all(|n| {
        g.level(n) == base
            && (0..=n).all(|i| (0..g.arrows(n)).all(|a| g.face(n, i, a) == a))
            && (0..n).all(|i| (0..g.arrows(n - 1)).all(|a| g.degen(n - 1, i, a) == a))
    })
}

/// The underlying category of degree-0 arrows.
pub fn underlying_category(g: &SimplicialGroupoid) -> FiniteCategory {
    let l = g.level(0);
    let m = l.arrows();
    FiniteCategory {
        objects: l.objects(),
        src: (0..m).map(|a| l.src(a)).collect(),
        tgt: (0..m).map(|a| l.tgt(a)).collect(),
        identity: (0..l.objects()).map(|x| l.identity(x)).collect(),
        compose: (0..m).map(|b| (0..m).map(|a| l.compose(b, a)).collect()).collect(),
    }
}

/// For a constant `𝒢`, the comparison `W̄𝒢 → N(𝒢₀)` reading a tuple
/// `(g₀, …, g_{n−1})` as the chain `x₀ → ⋯ → x_n` with `f_l = g_{n−l}`.
pub fn classical_nerve_map(g: &SimplicialGroupoid, wbar: &TruncatedSSet) -> Result<SimplicialMapData> {
    if !is_constant(g) {
        return Err(Error::Precondition("the classical nerve comparison needs a constant simplicial groupoid".into()));
    }
    let cat = underlying_category(g);
    let cap = wbar.dim_cap();
    let nerve = category_nerve(&cat, cap)?;
    let mut assignment = Vec::new();
    for n in 0..=cap {
        let index: std::collections::HashMap<Chain, usize> = crate::simplicial::classical::chains(&cat, n)
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let level = wbar_simplices(g, n)
            .into_iter()
            .map(|s| {
                let chain = Chain { start: s.objects[0], arrows: s.arrows.iter().rev().copied().collect() };
                index[&chain]
            })
            .collect();
        assignment.push(level);
    }
    SimplicialMapData::new(wbar.clone(), nerve, assignment)
}
