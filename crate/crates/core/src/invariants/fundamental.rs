//! Path components and the fundamental group of a Kan complex.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::simplicial::{is_kan, TruncatedSSet};
use crate::{Error, Result};

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut cur = x;
    while parent[cur] != r {
        let next = parent[cur];
        parent[cur] = r;
        cur = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Path components of a simplicial set, from its 1-skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Components {
    /// `component_of[v]` is the smallest vertex in the component of `v`.
    pub component_of: Vec<usize>,
    /// Smallest vertex of each component, increasing.
    pub representatives: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

pub fn pi0(sset: &TruncatedSSet) -> Components {
    let mut parent: Vec<usize> = (0..sset.count(0)).collect();
    if sset.dim_cap() >= 1 {
        for e in 0..sset.count(1) {
            union(&mut parent, sset.face(1, 0, e), sset.face(1, 1, e));
        }
    }
    let component_of: Vec<usize> = (0..parent.len()).map(|v| find(&mut parent, v)).collect();
    let representatives = (0..parent.len()).filter(|&v| component_of[v] == v).collect();
    Components { component_of, representatives }
}

/// `π₁(X, base)` as an explicit multiplication table on loop classes.
///
/// A loop is an edge with both ends at `base`. Two loops `a`, `b` are
/// identified when some 2-simplex has faces `(s₀ base, b, a)`. The product
/// `[a]·[b]` is `[d₁σ]` for any `σ` with `d₂σ = a` and `d₀σ = b`, i.e. `a`
/// followed by `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Table {
    pub base: usize,
    /// Loops in each class, increasing; class 0 contains `s₀ base`.
    pub classes: Vec<Vec<usize>>,
    /// `mul[a][b] = [a]·[b]`.
    pub mul: Vec<Vec<usize>>,
    class_of: HashMap<usize, usize>,
}

impl Pi1Table {
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn class_of(&self, edge: usize) -> Option<usize> {
        self.class_of.get(&edge).copied()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }
}

/// Computes `π₁(X, base)` and verifies every claim it relies on: the
/// relation is an equivalence, products are independent of the loop
/// representatives and of the filler, and the group laws hold.
pub fn pi1(sset: &TruncatedSSet, base: usize) -> Result<Pi1Table> {
    if sset.dim_cap() < 2 {
        return Err(Error::Precondition("π₁ needs simplices through dimension 2".into()));
    }
    if base >= sset.count(0) {
        return Err(Error::Precondition(format!("{base} is not a vertex")));
    }
    let kan = is_kan(sset, sset.dim_cap().min(3))?;
    if !kan.kan {
        return Err(Error::Precondition(format!("π₁ needs a Kan complex; first unfillable horn {:?}", kan.first_failure)));
    }
    let loops: Vec<usize> =
        (0..sset.count(1)).filter(|&e| sset.face(1, 0, e) == base && sset.face(1, 1, e) == base).collect();
    let constant = sset.degeneracy(0, 0, base)?;
    let slot: HashMap<usize, usize> = loops.iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let mut related: HashSet<(usize, usize)> = HashSet::new();
    let mut parent: Vec<usize> = (0..loops.len()).collect();
    let mut fillers: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for s in 0..sset.count(2) {
        let (d0, d1, d2) = (sset.face(2, 0, s), sset.face(2, 1, s), sset.face(2, 2, s));
        let (Some(_), Some(&i1), Some(&i2)) = (slot.get(&d0), slot.get(&d1), slot.get(&d2)) else { continue };
        fillers.entry((d2, d0)).or_default().push(d1);
        if d0 == constant {
            related.insert((d2, d1));
            union(&mut parent, i2, i1);
        }
    }
    // The union-find closure must agree with the raw relation.
    let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &e) in loops.iter().enumerate() {
        members.entry(find(&mut parent, i)).or_default().push(e);
    }
    for group in members.values() {
        for &a in group {
            for &b in group {
                if !related.contains(&(a, b)) {
                    return Err(Error::Invariant(format!("loops {a} and {b} are joined only through transitivity")));
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = members.into_values().collect();
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    classes.sort_by_key(|c| (!c.contains(&constant), c[0]));
    let class_of: HashMap<usize, usize> =
        classes.iter().enumerate().flat_map(|(k, c)| c.iter().map(move |&e| (e, k))).collect();

    let n = classes.len();
    let mut mul = vec![vec![usize::MAX; n]; n];
    for &a in &loops {
        for &b in &loops {
            let outs = fillers.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[]);
            if outs.is_empty() {
                return Err(Error::Invariant(format!("no filler composes loops {a} and {b}")));
            }
            for &c in outs {
                let (ca, cb, cc) = (class_of[&a], class_of[&b], class_of[&c]);
                if mul[ca][cb] == usize::MAX {
                    mul[ca][cb] = cc;
                } else if mul[ca][cb] != cc {
                    return Err(Error::Invariant(format!("product of loops {a} and {b} depends on the filler")));
                }
            }
        }
    }
    let table = Pi1Table { base, classes, mul, class_of };
    check_group_laws(&table)?;
    Ok(table)
}

fn check_group_laws(t: &Pi1Table) -> Result<()> {
    let n = t.order();
    let e = t.identity();
    for a in 0..n {
        if t.mul[e][a] != a || t.mul[a][e] != a {
            return Err(Error::Invariant(format!("class {a} breaks the unit law")));
        }
        if !(0..n).any(|b| t.mul[a][b] == e && t.mul[b][a] == e) {
            return Err(Error::Invariant(format!("class {a} has no inverse")));
        }
        for b in 0..n {
            for c in 0..n {
                if t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]] {
                    return Err(Error::Invariant(format!("associativity fails at ({a}, {b}, {c})")));
                }
            }
        }
    }
    Ok(())
}
