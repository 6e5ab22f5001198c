//! Horns `Λⁿ_k`, exhaustive filler search, and Kan checks.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::map::SimplicialMapData;
use super::sset::TruncatedSSet;
use crate::{Error, Result};

/// A horn `Λⁿ_k` in a truncated simplicial set. Compatibility of the faces is
/// checked when the horn is built.
#[derive(Clone, Debug)]
pub struct Horn<'a> {
    ambient: &'a TruncatedSSet,
    n: usize,
    k: usize,
    /// Faces `d_i` for `i ≠ k`, in increasing `i`.
    faces: Vec<usize>,
}

/// A horn that could not be filled, recorded by value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornWitness {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KanReport {
    pub kan: bool,
    pub horns_checked: u64,
    pub first_failure: Option<HornWitness>,
}

impl<'a> Horn<'a> {
    pub fn new(ambient: &'a TruncatedSSet, n: usize, k: usize, faces: Vec<usize>) -> Result<Self> {
        if n == 0 || n > ambient.dim_cap() {
            return Err(Error::DimensionOutOfRange { requested: n, cap: ambient.dim_cap() });
        }
        if k > n {
            return Err(Error::InvalidHorn(format!("missing face {k} out of range for dimension {n}")));
        }
        if faces.len() != n {
            return Err(Error::InvalidHorn(format!("expected {n} faces, got {}", faces.len())));
        }
        if let Some(&y) = faces.iter().find(|&&y| y >= ambient.count(n - 1)) {
            return Err(Error::InvalidHorn(format!("face {y} is not a simplex at level {}", n - 1)));
        }
        let horn = Horn { ambient, n, k, faces };
        for j in 0..=n {
            for i in 0..j {
                if i == k || j == k {
                    continue;
                }
                let (yi, yj) = (horn.face(i).unwrap(), horn.face(j).unwrap());
                if ambient.face(n - 1, i, yj) != ambient.face(n - 1, j - 1, yi) {
                    return Err(Error::InvalidHorn(format!("faces {i} and {j} disagree: d{i} y{j} ≠ d{} y{i}", j - 1)));
                }
            }
        }
        Ok(horn)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn missing(&self) -> usize {
        self.k
    }

    /// The face `d_i` of the horn, `None` for the missing index.
    pub fn face(&self, i: usize) -> Option<usize> {
        match i.cmp(&self.k) {
            std::cmp::Ordering::Less => Some(self.faces[i]),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(self.faces[i - 1]),
        }
    }

    pub fn witness(&self) -> HornWitness {
        HornWitness { n: self.n, k: self.k, faces: self.faces.clone() }
    }
}

/// Scans level `n` for a simplex whose faces match the horn.
pub fn find_filler(horn: &Horn<'_>) -> Option<usize> {
    let x_n = horn.n;
    (0..horn.ambient.count(x_n))
        .find(|&x| (0..=x_n).filter(|&i| i != horn.k).all(|i| horn.ambient.face(x_n, i, x) == horn.face(i).unwrap()))
}

/// Enumerates every compatible face tuple for `Λⁿ_k` by backtracking, in
/// lexicographic order of the tuple.
pub fn for_each_horn<B>(
    sset: &TruncatedSSet,
    n: usize,
    k: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    assert!(n >= 1 && n <= sset.dim_cap() && k <= n);
    let below = n - 1;
    let count = sset.count(below);
    // by_face[i][v] = simplices y at level n−1 with d_i y = v
    let by_face: Vec<HashMap<usize, Vec<usize>>> = if below == 0 {
        Vec::new()
    } else {
        (0..=below)
            .map(|i| {
                let mut m: HashMap<usize, Vec<usize>> = HashMap::new();
                for y in 0..count {
                    m.entry(sset.face(below, i, y)).or_default().push(y);
                }
                m
            })
            .collect()
    };
    let positions: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
    let all: Vec<usize> = (0..count).collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);

    fn rec<B>(
        sset: &TruncatedSSet,
        n: usize,
        positions: &[usize],
        by_face: &[HashMap<usize, Vec<usize>>],
        all: &[usize],
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        let slot = chosen.len();
        if slot == positions.len() {
            return match visit(chosen) {
                ControlFlow::Break(b) => Some(b),
                ControlFlow::Continue(()) => None,
            };
        }
        let j = positions[slot];
        let candidates: &[usize] = if slot == 0 {
            all
        } else {
            let i0 = positions[0];
            let want = sset.face(n - 1, j - 1, chosen[0]);
            by_face[i0].get(&want).map(Vec::as_slice).unwrap_or(&[])
        };
        for &y in candidates {
            let ok = (1..slot).all(|s| {
                let i = positions[s];
                sset.face(n - 1, i, y) == sset.face(n - 1, j - 1, chosen[s])
            });
            if !ok {
                continue;
            }
            chosen.push(y);
            let r = rec(sset, n, positions, by_face, all, chosen, visit);
            chosen.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    rec(sset, n, &positions, &by_face, &all, &mut chosen, &mut visit)
}

fn faces_except(sset: &TruncatedSSet, n: usize, k: usize, x: usize) -> Vec<usize> {
    (0..=n).filter(|&i| i != k).map(|i| sset.face(n, i, x)).collect()
}

/// Checks that every horn `Λⁿ_k` with `1 ≤ n ≤ up_to` has a filler.
pub fn is_kan(sset: &TruncatedSSet, up_to: usize) -> Result<KanReport> {
    if up_to > sset.dim_cap() {
        return Err(Error::DimensionOutOfRange { requested: up_to, cap: sset.dim_cap() });
    }
    let mut checked = 0u64;
    for n in 1..=up_to {
        for k in 0..=n {
            let fillable: HashSet<Vec<usize>> = (0..sset.count(n)).map(|x| faces_except(sset, n, k, x)).collect();
            let failure = for_each_horn(sset, n, k, |faces| {
                checked += 1;
                if fillable.contains(faces) {
                    ControlFlow::Continue(())
                } else {
                    ControlFlow::Break(faces.to_vec())
                }
            });
            if let Some(faces) = failure {
                return Ok(KanReport { kan: false, horns_checked: checked, first_failure: Some(HornWitness { n, k, faces }) });
            }
        }
    }
    Ok(KanReport { kan: true, horns_checked: checked, first_failure: None })
}

/// Right lifting property of `map : E → B` against every horn inclusion
/// `Λⁿ_k → Δⁿ` with `1 ≤ n ≤ up_to`.
pub fn is_kan_fibration(map: &SimplicialMapData, up_to: usize) -> Result<KanReport> {
    let (total, base) = (map.source(), map.target());
    let cap = total.dim_cap().min(base.dim_cap());
    if up_to > cap {
        return Err(Error::DimensionOutOfRange { requested: up_to, cap });
    }
    let mut checked = 0u64;
    for n in 1..=up_to {
        for k in 0..=n {
            let liftable: HashSet<(Vec<usize>, usize)> =
                (0..total.count(n)).map(|x| (faces_except(total, n, k, x), map.apply(n, x))).collect();
            let mut base_fillers: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for y in 0..base.count(n) {
                base_fillers.entry(faces_except(base, n, k, y)).or_default().push(y);
            }
            let failure = for_each_horn(total, n, k, |faces| {
                let image: Vec<usize> = faces.iter().map(|&f| map.apply(n - 1, f)).collect();
                for &y in base_fillers.get(&image).map(Vec::as_slice).unwrap_or(&[]) {
                    checked += 1;
                    if !liftable.contains(&(faces.to_vec(), y)) {
                        return ControlFlow::Break(faces.to_vec());
                    }
                }
                ControlFlow::Continue(())
            });
            if let Some(faces) = failure {
                return Ok(KanReport { kan: false, horns_checked: checked, first_failure: Some(HornWitness { n, k, faces }) });
            }
        }
    }
    Ok(KanReport { kan: true, horns_checked: checked, first_failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::classical::{standard_simplex, FiniteCategory, category_nerve};

    #[test]
    fn incompatible_horn_rejected_eagerly() {
        let d2 = standard_simplex(2, 2).unwrap();
        // Λ²₁ needs d₁ y₀ ... with faces (d₀, d₂): d₀ y₂ = d₁ y₀
        // vertex ids 0,1,2; edges lexicographic (0,0),(0,1),(0,2),(1,1),(1,2),(2,2)
        let edge_12 = 4;
        let edge_01 = 1;
        assert!(Horn::new(&d2, 2, 1, vec![edge_12, edge_01]).is_ok());
        assert!(Horn::new(&d2, 2, 1, vec![edge_01, edge_12]).is_err());
    }

    #[test]
    fn inner_horn_in_poset_nerve_fills_with_composite() {
        let d2 = standard_simplex(2, 2).unwrap();
        let horn = Horn::new(&d2, 2, 1, vec![4, 1]).unwrap();
        let x = find_filler(&horn).unwrap();
        assert_eq!(d2.faces_of(2, x), vec![4, 2, 1]);
        assert!(!d2.is_degenerate(2, x));
    }

    #[test]
    fn poset_one_is_not_kan() {
        let d1 = category_nerve(&FiniteCategory::ordinal(1), 2).unwrap();
        let report = is_kan(&d1, 2).unwrap();
        assert!(!report.kan);
        let w = report.first_failure.unwrap();
        assert_eq!(w.n, 2);
        assert!(is_kan(&d1, 1).unwrap().kan);
    }

    #[test]
    fn one_dimensional_horn_has_degenerate_filler() {
        let d1 = standard_simplex(1, 1).unwrap();
        // Λ¹₀ only prescribes d₁ = vertex 1
        let horn = Horn::new(&d1, 1, 0, vec![1]).unwrap();
        let x = find_filler(&horn).unwrap();
        assert_eq!(d1.face(1, 1, x), 1);
        assert!(d1.is_degenerate(1, x));
    }

    #[test]
    fn dimension_out_of_range() {
        let d1 = standard_simplex(1, 1).unwrap();
        assert!(matches!(Horn::new(&d1, 2, 0, vec![0, 0]), Err(Error::DimensionOutOfRange { .. })));
        assert!(is_kan(&d1, 2).is_err());
    }
}
