//! The cosimplicial simplicial category `Δ•_W̄` whose functors into a
//! simplicial groupoid are exactly the simplices of `W̄`.
//!
//! `Δⁿ_W̄` is free on generators `l = 1..=n`, with `l : l−1 → l` of degree
//! `n − l`. A `k`-simplex of `Δⁿ_W̄(a, b)` is a tuple of monotone maps
//! `θ_l : [k] → [n − l]` for `a < l ≤ b`, and composition concatenates.

use crate::simplicial::{Elementary, MonotoneMap, SimplicialOps};
use crate::groups::SimplicialGroupoid;

/// A `k`-simplex of `Δⁿ_W̄(src, tgt)`. `components[t]` belongs to generator
/// `src + 1 + t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WbarMorphism {
    pub n: usize,
    pub src: usize,
    pub tgt: usize,
    pub dim: usize,
    pub components: Vec<MonotoneMap>,
}

impl WbarMorphism {
    pub fn identity(n: usize, object: usize, dim: usize) -> Self {
        Self { n, src: object, tgt: object, dim, components: Vec::new() }
    }

    /// The `k`-simplex of a single generator `l`.
    pub fn generator(n: usize, l: usize, theta: MonotoneMap) -> Self {
        assert!(l >= 1 && l <= n && theta.target_dim() == n - l);
        Self { n, src: l - 1, tgt: l, dim: theta.source_dim(), components: vec![theta] }
    }

    pub fn component(&self, l: usize) -> &MonotoneMap {
        &self.components[l - self.src - 1]
    }

    /// `later ∘ self`.
    pub fn then(&self, later: &WbarMorphism) -> WbarMorphism {
        assert!(self.n == later.n && self.dim == later.dim && self.tgt == later.src, "non-composable morphisms");
        let mut components = self.components.clone();
        components.extend(later.components.iter().cloned());
        WbarMorphism { n: self.n, src: self.src, tgt: later.tgt, dim: self.dim, components }
    }

    /// `θ^*` on the hom simplicial set: precompose every component.
    pub fn restrict(&self, theta: &MonotoneMap) -> WbarMorphism {
        assert_eq!(theta.target_dim(), self.dim);
        WbarMorphism {
            n: self.n,
            src: self.src,
            tgt: self.tgt,
            dim: theta.source_dim(),
            components: self.components.iter().map(|c| c.after(theta)).collect(),
        }
    }

    /// Component values at vertex `t`, in generator order.
    pub fn vertex(&self, t: usize) -> Vec<usize> {
        self.components.iter().map(|c| c.apply(t)).collect()
    }

    pub fn check(&self) -> bool {
        self.src <= self.tgt
            && self.tgt <= self.n
            && self.components.len() == self.tgt - self.src
            && self.components.iter().enumerate().all(|(t, c)| {
                c.source_dim() == self.dim && c.target_dim() == self.n - (self.src + 1 + t)
            })
    }

    /// Evaluates a `W̄`-simplex, read as a functor `F : Δⁿ_W̄ → 𝒢` with
    /// objects `objects[a]` and generator images `gens[l − 1]` of degree
    /// `n − l`, on this morphism: `θ_b^* f_b ∘ ⋯ ∘ θ_{a+1}^* f_{a+1}`.
    pub fn evaluate(&self, g: &SimplicialGroupoid, objects: &[usize], gens: &[usize]) -> usize {
        let mut acc = g.identity(self.dim, objects[self.src]);
        for (t, theta) in self.components.iter().enumerate() {
            let l = self.src + 1 + t;
            let piece = g.act(gens[l - 1], theta);
            acc = g.compose(self.dim, piece, acc);
        }
        acc
    }
}

/// A simplicial functor `Δᵖ_W̄ → Δ^q_W̄`, determined by its object map and
/// the images of the generators (each at the generator's own degree).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WbarFunctor {
    pub source_n: usize,
    pub target_n: usize,
    pub objects: Vec<usize>,
    /// `generators[l − 1]` is the image of generator `l`.
    pub generators: Vec<WbarMorphism>,
}

impl WbarFunctor {
    pub fn identity(n: usize) -> Self {
        let generators = (1..=n).map(|l| WbarMorphism::generator(n, l, MonotoneMap::identity(n - l))).collect();
        Self { source_n: n, target_n: n, objects: (0..=n).collect(), generators }
    }

    pub fn apply(&self, m: &WbarMorphism) -> WbarMorphism {
        assert_eq!(m.n, self.source_n);
        let a = self.objects[m.src];
        let mut out = WbarMorphism::identity(self.target_n, a, m.dim);
        for (t, theta) in m.components.iter().enumerate() {
            let l = m.src + 1 + t;
            out = out.then(&self.generators[l - 1].restrict(theta));
        }
        out
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &WbarFunctor) -> WbarFunctor {
        assert_eq!(first.target_n, self.source_n);
        WbarFunctor {
            source_n: first.source_n,
            target_n: self.target_n,
            objects: first.objects.iter().map(|&o| self.objects[o]).collect(),
            generators: first.generators.iter().map(|g| self.apply(g)).collect(),
        }
    }

    /// `∂_i : Δ^{n−1}_W̄ → Δⁿ_W̄`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        let delta = MonotoneMap::coface(n, i);
        let generators = (1..n)
            .map(|l| {
                if l < i || i == n {
                    WbarMorphism::generator(n, l, MonotoneMap::coface(n - l, i - l))
                } else if l == i {
                    let first = WbarMorphism::generator(n, i, MonotoneMap::coface(n - i, 0));
                    first.then(&WbarMorphism::generator(n, i + 1, MonotoneMap::identity(n - i - 1)))
                } else {
                    WbarMorphism::generator(n, l + 1, MonotoneMap::identity(n - 1 - l))
                }
            })
            .collect();
        Self { source_n: n - 1, target_n: n, objects: delta.values().to_vec(), generators }
    }

    /// `σ_i : Δ^{n+1}_W̄ → Δⁿ_W̄`.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        let sigma = MonotoneMap::codegeneracy(n, i);
        let generators = (1..=n + 1)
            .map(|l| {
                if l <= i {
                    WbarMorphism::generator(n, l, MonotoneMap::codegeneracy(n - l, i - l))
                } else if l == i + 1 {
                    WbarMorphism::identity(n, i, n - i)
                } else {
                    WbarMorphism::generator(n, l - 1, MonotoneMap::identity(n + 1 - l))
                }
            })
            .collect();
        Self { source_n: n + 1, target_n: n, objects: sigma.values().to_vec(), generators }
    }

    /// `α_*` for any monotone `α`, through its elementary factorization.
    pub fn push(alpha: &MonotoneMap) -> Self {
        let mut f = WbarFunctor::identity(alpha.source_dim());
        for step in alpha.decompose() {
            let e = match step {
                Elementary::Coface { i, dim } => WbarFunctor::coface(dim, i),
                Elementary::Codegeneracy { i, dim } => WbarFunctor::codegeneracy(dim, i),
            };
            f = e.after(&f);
        }
        f
    }

    pub fn check(&self) -> bool {
        self.objects.len() == self.source_n + 1
            && self.generators.len() == self.source_n
            && self.generators.iter().enumerate().all(|(t, g)| {
                let l = t + 1;
                g.check()
                    && g.n == self.target_n
                    && g.dim == self.source_n - l
                    && g.src == self.objects[l - 1]
                    && g.tgt == self.objects[l]
            })
    }
}

/// Every cosimplicial identity among `∂`, `σ` with target at most `max_n`
/// that fails, described.
pub fn cosimplicial_identity_failures(max_n: usize) -> Vec<String> {
    let d = WbarFunctor::coface;
    let s = WbarFunctor::codegeneracy;
    let mut out = Vec::new();
    let mut expect = |lhs: WbarFunctor, rhs: WbarFunctor, what: String| {
        if lhs != rhs {
            out.push(what);
        }
    };
    for n in 2..=max_n {
        for j in 1..=n {
            for i in 0..j {
                expect(d(n, j).after(&d(n - 1, i)), d(n, i).after(&d(n - 1, j - 1)), format!("∂∂ at n={n}, i={i}, j={j}"));
            }
        }
    }
    for n in 0..max_n {
        for j in 0..=n {
            for i in 0..=j {
                expect(s(n, j).after(&s(n + 1, i)), s(n, i).after(&s(n + 1, j + 1)), format!("σσ at n={n}, i={i}, j={j}"));
            }
        }
    }
    for n in 1..=max_n {
        // σ_j ∂_i : [n−1] → [n] → [n−1]
        for j in 0..n {
            for i in 0..=n {
                let lhs = s(n - 1, j).after(&d(n, i));
                let rhs = if i < j {
                    d(n - 1, i).after(&s(n - 2, j - 1))
                } else if i == j || i == j + 1 {
                    WbarFunctor::identity(n - 1)
                } else {
                    d(n - 1, i - 1).after(&s(n - 2, j))
                };
                expect(lhs, rhs, format!("σ∂ at n={n}, i={i}, j={j}"));
            }
        }
    }
    for n in 1..=max_n {
        out.extend((0..=n).filter(|&i| !d(n, i).check()).map(|i| format!("∂_{i} into {n} is ill-formed")));
    }
    for n in 0..max_n {
        out.extend((0..=n).filter(|&i| !s(n, i).check()).map(|i| format!("σ_{i} onto {n} is ill-formed")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        assert_eq!(cosimplicial_identity_failures(4), Vec::<String>::new());
    }

    #[test]
    fn push_is_functorial() {
        for p in 0..=3 {
            for q in 0..=3 {
                for r in 0..=3 {
                    for a in MonotoneMap::all(p, q) {
                        for b in MonotoneMap::all(q, r) {
                            let lhs = WbarFunctor::push(&b.after(&a));
                            let rhs = WbarFunctor::push(&b).after(&WbarFunctor::push(&a));
                            assert_eq!(lhs, rhs);
                            assert!(lhs.check());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn middle_coface_composes_adjacent_generators() {
        let f = WbarFunctor::coface(2, 1);
        let g = &f.generators[0];
        assert_eq!((g.src, g.tgt, g.dim), (0, 2, 0));
        assert_eq!(g.vertex(0), vec![1, 0]);
    }
}
