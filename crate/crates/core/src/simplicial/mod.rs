//! Truncated simplicial sets, simplicial maps, Eilenberg–Zilber bookkeeping,
//! horns and Kan checks.

pub mod classical;
pub mod delta;
pub mod horn;
pub mod map;
pub mod sset;

use std::collections::HashSet;

pub use delta::{Elementary, MonotoneMap, SimplicialOps};
pub use horn::{find_filler, is_kan, is_kan_fibration, Horn, HornWitness, KanReport};
pub use map::SimplicialMapData;
pub use sset::{assemble, EzDecomposition, TruncatedSSet, Violation};

/// Number of strictly decreasing words `s_{i₁} ⋯ s_{i_k}` that take level
/// `n − k` to level `n`.
fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// Checks that `ez_decompose` is injective on every level and that the level
/// sizes equal `Σ_k C(n, k) · #nondeg(n − k)`.
pub fn ez_is_bijective(sset: &TruncatedSSet) -> bool {
    let nondeg: Vec<usize> = (0..=sset.dim_cap()).map(|n| sset.nondegenerate(n).len()).collect();
    (0..=sset.dim_cap()).all(|n| {
        let expected: usize = (0..=n).map(|k| binomial(n, k) * nondeg[n - k]).sum();
        let mut seen = HashSet::new();
        let injective = (0..sset.count(n)).all(|x| {
            let ez = sset.ez_decompose(n, x).expect("in range");
            ez.word.windows(2).all(|w| w[0] > w[1]) && seen.insert(ez)
        });
        injective && expected == sset.count(n)
    })
}

#[cfg(test)]
mod tests {
    use super::classical::standard_simplex;
    use super::*;

    #[test]
    fn corrupted_face_is_reported() {
        let mut d2 = standard_simplex(2, 2).unwrap();
        assert!(d2.validate().is_empty());
        // the nondegenerate 2-simplex is chain 0→1→2; send its d₀ to the wrong edge
        let top = d2.nondegenerate(2)[0];
        let wrong = d2.face(2, 1, top);
        d2.corrupt_face(2, 0, top, wrong);
        let report = d2.validate();
        assert!(report.iter().any(|v| v.level == 2 && v.simplex == top && v.relation.starts_with("d0 d")));
    }

    #[test]
    fn ez_of_degenerate_vertex() {
        let d1 = standard_simplex(1, 3).unwrap();
        let v = 1;
        let s0v = d1.degeneracy(0, 0, v).unwrap();
        let ez = d1.ez_decompose(1, s0v).unwrap();
        assert_eq!(ez, EzDecomposition { word: vec![0], base_level: 0, base: v });
        // s₁s₀v = s₀s₀v has a single canonical word [1, 0]
        let a = d1.degeneracy(1, 1, s0v).unwrap();
        let b = d1.degeneracy(1, 0, s0v).unwrap();
        assert_eq!(a, b);
        assert_eq!(d1.ez_decompose(2, a).unwrap().word, vec![1, 0]);
    }

    #[test]
    fn ez_of_nondegenerate_edge() {
        let d1 = standard_simplex(1, 2).unwrap();
        let e = d1.nondegenerate(1)[0];
        let ez = d1.ez_decompose(1, e).unwrap();
        assert!(ez.word.is_empty());
        assert_eq!(ez.base, e);
        assert!(ez_is_bijective(&d1));
    }

    #[test]
    fn act_matches_poset_nerve() {
        // in Δ^q, the top simplex pulled back along θ is θ itself
        let q = 3;
        let dq = standard_simplex(q, 4).unwrap();
        let top = dq.nondegenerate(q)[0];
        for p in 0..=4 {
            for theta in MonotoneMap::all(p, q) {
                let x = dq.act(top, &theta);
                // read off vertices of x via iterated last/first faces
                let vertices: Vec<usize> = (0..=p)
                    .map(|t| {
                        let mut cur = x;
                        let mut level = p;
                        // keep only vertex t
                        for i in (t + 1..=p).rev() {
                            cur = dq.face(level, i, cur);
                            level -= 1;
                        }
                        for _ in 0..t {
                            cur = dq.face(level, 0, cur);
                            level -= 1;
                        }
                        cur
                    })
                    .collect();
                assert_eq!(vertices, theta.values());
            }
        }
    }

    #[test]
    fn truncation_fails_loudly() {
        let d1 = standard_simplex(1, 2).unwrap();
        assert!(matches!(d1.degeneracy(2, 0, 0), Err(crate::Error::Truncated { needed: 3, cap: 2 })));
    }

    #[test]
    fn json_round_trip() {
        let d2 = standard_simplex(2, 3).unwrap();
        let s = d2.to_json_string();
        let back = TruncatedSSet::from_json_str(&s).unwrap();
        assert_eq!(back, d2);
        assert_eq!(back.to_json_string(), s);
    }
}
