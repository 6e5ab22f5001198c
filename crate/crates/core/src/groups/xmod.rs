use super::group::FiniteGroup;
use super::groupoid::{GroupoidLevel, SimplicialGroupoid};
use crate::{Error, Result};

/// A finite crossed module `∂ : M → P` with a left action `p ▷ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    p: FiniteGroup,
    m: FiniteGroup,
    boundary: Vec<usize>,
    /// `action[p][m] = p ▷ m`.
    action: Vec<Vec<usize>>,
}

impl CrossedModule {
    pub fn new(p: FiniteGroup, m: FiniteGroup, boundary: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self> {
        let xm = Self { p, m, boundary, action };
        xm.check()?;
        Ok(xm)
    }

    /// Trivial boundary and trivial action; needs `M` abelian for Peiffer.
    pub fn trivial(p: FiniteGroup, m: FiniteGroup) -> Result<Self> {
        let boundary = vec![0; m.order()];
        let action = vec![(0..m.order()).collect(); p.order()];
        Self::new(p, m, boundary, action)
    }

    /// `G → G` the identity, `G` acting on itself by conjugation.
    pub fn conjugation(g: FiniteGroup) -> Result<Self> {
        let n = g.order();
        let action = (0..n).map(|p| (0..n).map(|m| g.mul(g.mul(p, m), g.inv(p))).collect()).collect();
        Self::new(g.clone(), g, (0..n).collect(), action)
    }

    fn check(&self) -> Result<()> {
        let (p, m) = (&self.p, &self.m);
        let err = |s: String| Err(Error::InvalidCrossedModule(s));
        if !m.is_homomorphism_to(p, &self.boundary) {
            return err("boundary is not a homomorphism".into());
        }
        if self.action.len() != p.order() || self.action.iter().any(|r| r.len() != m.order() || r.iter().any(|&v| v >= m.order())) {
            return err("action table has the wrong shape".into());
        }
        let act = |a: usize, x: usize| self.action[a][x];
        for a in 0..p.order() {
            if !m.is_homomorphism_to(m, &self.action[a]) {
                return err(format!("element {a} does not act by a homomorphism"));
            }
            for b in 0..p.order() {
                if (0..m.order()).any(|x| act(p.mul(a, b), x) != act(a, act(b, x))) {
                    return err(format!("action is not associative at ({a}, {b})"));
                }
            }
        }
        if (0..m.order()).any(|x| act(0, x) != x) {
            return err("identity does not act trivially".into());
        }
        for a in 0..p.order() {
            for x in 0..m.order() {
                let conj = p.mul(p.mul(a, self.boundary[x]), p.inv(a));
                if self.boundary[act(a, x)] != conj {
                    return err(format!("equivariance fails at ({a}, {x})"));
                }
            }
        }
        for x in 0..m.order() {
            for y in 0..m.order() {
                if act(self.boundary[x], y) != m.mul(m.mul(x, y), m.inv(x)) {
                    return err(format!("Peiffer identity fails at ({x}, {y})"));
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.p
    }

    pub fn fiber(&self) -> &FiniteGroup {
        &self.m
    }

    /// Decodes a level-`n` element into `(p₀, [m₁, …, m_n])`.
    pub fn decode(&self, n: usize, mut x: usize) -> (usize, Vec<usize>) {
        let p0 = x % self.p.order();
        x /= self.p.order();
        let ms = (0..n)
            .map(|_| {
                let v = x % self.m.order();
                x /= self.m.order();
                v
            })
            .collect();
        (p0, ms)
    }

    pub fn encode(&self, p0: usize, ms: &[usize]) -> usize {
        ms.iter().rev().fold(0, |acc, &v| acc * self.m.order() + v) * self.p.order() + p0
    }

    /// The nerve of the associated strict 2-group as a simplicial group:
    /// an `n`-simplex is a chain `p₀ → p₁ → ⋯ → p_n` of arrows `(m_k, p_{k−1})`
    /// with `p_k = ∂(m_k)·p_{k−1}`, so `G_n ≅ P × Mⁿ`.
    pub fn simplicial_group(&self, dim_cap: usize) -> Result<SimplicialGroupoid> {
        let (p, m) = (&self.p, &self.m);
        let size = |n: usize| {
            (0..n).try_fold(p.order(), |acc, _| acc.checked_mul(m.order())).filter(|&s| s <= super::group::MAX_ORDER)
        };
        let mut levels = Vec::new();
        for n in 0..=dim_cap {
            let order = size(n).ok_or_else(|| Error::InvalidCrossedModule(format!("level {n} exceeds the size guard")))?;
            let mul = (0..order).map(|x| (0..order).map(|y| self.level_mul(n, x, y)).collect()).collect();
            levels.push(GroupoidLevel::from_group(&FiniteGroup::from_table(mul)?));
        }
        let faces = (0..=dim_cap)
            .map(|n| {
                if n == 0 {
                    return Vec::new();
                }
                (0..=n).map(|i| (0..levels[n].arrows()).map(|x| self.face(n, i, x)).collect()).collect()
            })
            .collect();
        let degens = (0..=dim_cap)
            .map(|n| {
                if n == dim_cap {
                    return Vec::new();
                }
                (0..=n).map(|i| (0..levels[n].arrows()).map(|x| self.degen(n, i, x)).collect()).collect()
            })
            .collect();
        SimplicialGroupoid::new(levels, faces, degens)
    }

    /// Vertices `p₀, …, p_n` of a level-`n` chain.
    fn vertices(&self, p0: usize, ms: &[usize]) -> Vec<usize> {
        let mut out = vec![p0];
        for &x in ms {
            let last = *out.last().expect("non-empty");
            out.push(self.p.mul(self.boundary[x], last));
        }
        out
    }

    fn level_mul(&self, n: usize, x: usize, y: usize) -> usize {
        let (a, ms) = self.decode(n, x);
        let (b, ns) = self.decode(n, y);
        let verts = self.vertices(a, &ms);
        let prod: Vec<usize> = (0..n).map(|k| self.m.mul(ms[k], self.action[verts[k]][ns[k]])).collect();
        self.encode(self.p.mul(a, b), &prod)
    }

    fn face(&self, n: usize, i: usize, x: usize) -> usize {
        let (p0, mut ms) = self.decode(n, x);
        if i == 0 {
            let p1 = self.p.mul(self.boundary[ms[0]], p0);
            return self.encode(p1, &ms[1..]);
        }
        if i == n {
            ms.pop();
        } else {
            let joined = self.m.mul(ms[i], ms[i - 1]);
            ms.splice(i - 1..=i, [joined]);
        }
        self.encode(p0, &ms)
    }

    fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        let (p0, mut ms) = self.decode(n, x);
        ms.insert(i, 0);
        self.encode(p0, &ms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialOps;

    fn c2() -> FiniteGroup {
        FiniteGroup::cyclic(2).unwrap()
    }

    #[test]
    fn trivial_c2_counts() {
        let g = CrossedModule::trivial(c2(), c2()).unwrap().simplicial_group(4).unwrap();
        for n in 0..=4 {
            assert_eq!(g.arrows(n), 1 << (n + 1));
        }
        assert!(g.validate().is_empty());
    }

    #[test]
    fn faces_match_two_group_source_and_target() {
        // oracle: arrows of the 2-group are pairs (m, p) : p → ∂(m)p
        let xm = CrossedModule::conjugation(FiniteGroup::symmetric(3).unwrap()).unwrap();
        let g = xm.simplicial_group(2).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for m in 0..6 {
            for p in 0..6 {
                let x = p + 6 * m;
                assert_eq!(g.face(1, 1, x), p);
                assert_eq!(g.face(1, 0, x), s3.mul(m, p));
            }
        }
        assert!(g.validate().is_empty());
    }

    #[test]
    fn nonabelian_fiber_with_trivial_action_is_rejected() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(matches!(CrossedModule::trivial(c2(), s3), Err(Error::InvalidCrossedModule(_))));
    }

    #[test]
    fn non_equivariant_boundary_is_rejected() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let conj = CrossedModule::conjugation(s3.clone()).unwrap();
        let trivial_action = vec![(0..6).collect::<Vec<_>>(); 6];
        assert!(CrossedModule::new(s3.clone(), s3, (0..6).collect(), trivial_action).is_err());
        assert_eq!(conj.base().order(), 6);
    }
}
