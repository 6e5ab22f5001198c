//! Certification that a simplicial map between Kan complexes induces
//! isomorphisms on `π₀`, `π₁` and integral homology in low degrees.

use serde::{Deserialize, Serialize};

use super::chains::{chain_map, mapping_cone, HomologyGroup};
use super::fundamental::{pi0, pi1};
use crate::simplicial::{is_kan, SimplicialMapData};
use crate::{Error, Result, SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi0Clause {
    pub source: usize,
    pub target: usize,
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Clause {
    /// Order of `π₁` of the source at each component representative.
    pub order: usize,
    pub target_order: usize,
    pub iso: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyClause {
    pub k: usize,
    pub rank: usize,
    pub torsion: Vec<u64>,
    pub target_rank: usize,
    pub target_torsion: Vec<u64>,
    /// `H_k` of the mapping cone vanishes.
    pub cone_vanishes: bool,
    pub iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub schema: u32,
    pub through: usize,
    pub pi0: Pi0Clause,
    pub pi1: Pi1Clause,
    pub homology: Vec<HomologyClause>,
    pub passed: bool,
}

impl CertifyReport {
    pub fn source_homology(&self) -> Vec<HomologyGroup> {
        self.homology.iter().map(|h| HomologyGroup { k: h.k, rank: h.rank, torsion: h.torsion.clone() }).collect()
    }

    pub fn target_homology(&self) -> Vec<HomologyGroup> {
        self.homology
            .iter()
            .map(|h| HomologyGroup { k: h.k, rank: h.target_rank, torsion: h.target_torsion.clone() })
            .collect()
    }

    /// First failing clause, if any.
    pub fn failure(&self) -> Option<String> {
        if !self.pi0.bijective {
            return Some("π₀ is not a bijection".into());
        }
        if !self.pi1.iso {
            return Some(format!("π₁ is not an isomorphism: {}", self.pi1.witness.clone().unwrap_or_default()));
        }
        self.homology.iter().find(|h| !h.iso).map(|h| format!("H_{} is not an isomorphism", h.k))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let r: CertifyReport = serde_json::from_str(s)?;
        if r.schema != SCHEMA_VERSION {
            return Err(Error::Schema { expected: SCHEMA_VERSION, found: r.schema });
        }
        Ok(r)
    }
}

/// Checks (a) `π₀` bijection, (b) `π₁` isomorphism through the induced map
/// on loop classes at every component, (c) `H_k` isomorphism for `k ≤ through`.
///
/// For (c), `H_k(f)` is an isomorphism for all `k ≤ D` exactly when the
/// mapping cone is acyclic through `D` and `H_D` of both sides are abstractly
/// isomorphic: acyclicity gives isomorphisms below `D` and a surjection in
/// degree `D`, and a surjection between isomorphic finitely generated abelian
/// groups is injective.
pub fn certify_equivalence(f: &SimplicialMapData, through: usize) -> Result<CertifyReport> {
    let cap = f.dim_cap();
    if through + 1 > cap {
        return Err(Error::DimensionOutOfRange { requested: through, cap: cap.saturating_sub(1) });
    }
    if let Some(v) = f.validate().first() {
        return Err(Error::Precondition(format!("map is not simplicial: {v}")));
    }
    for (side, s) in [("source", f.source()), ("target", f.target())] {
        let r = is_kan(s, cap.min(3))?;
        if !r.kan {
            return Err(Error::Precondition(format!("{side} is not Kan: {:?}", r.first_failure)));
        }
    }

    let cx = pi0(f.source());
    let cy = pi0(f.target());
    let image: Vec<usize> = cx.representatives.iter().map(|&v| cy.component_of[f.apply(0, v)]).collect();
    let mut seen = image.clone();
    seen.sort_unstable();
    seen.dedup();
    let pi0_clause = Pi0Clause { source: cx.count(), target: cy.count(), bijective: seen.len() == image.len() && seen.len() == cy.count() };

    let mut pi1_clause = Pi1Clause { order: 0, target_order: 0, iso: true, witness: None };
    if cap >= 2 {
        for &v in &cx.representatives {
            let (tx, ty) = (pi1(f.source(), v)?, pi1(f.target(), f.apply(0, v))?);
            if v == cx.representatives[0] {
                pi1_clause.order = tx.order();
                pi1_clause.target_order = ty.order();
            }
            let class_map: Vec<Option<usize>> = tx
                .classes
                .iter()
                .map(|members| {
                    let images: Vec<Option<usize>> = members.iter().map(|&e| ty.class_of(f.apply(1, e))).collect();
                    if images.windows(2).all(|w| w[0] == w[1]) {
                        images[0]
                    } else {
                        None
                    }
                })
                .collect();
            let problem = if class_map.iter().any(Option::is_none) {
                Some(format!("loop classes at {v} do not map to single classes"))
            } else {
                let m: Vec<usize> = class_map.into_iter().map(Option::unwrap).collect();
                let mut sorted = m.clone();
                sorted.sort_unstable();
                sorted.dedup();
                let n = tx.order();
                if sorted.len() != n || n != ty.order() {
                    Some(format!("induced map on π₁ at {v} is not bijective ({n} → {})", ty.order()))
                } else if (0..n).any(|a| (0..n).any(|b| m[tx.mul[a][b]] != ty.mul[m[a]][m[b]])) {
                    Some(format!("induced map on π₁ at {v} is not a homomorphism"))
                } else {
                    None
                }
            };
            if let Some(p) = problem {
                pi1_clause.iso = false;
                pi1_clause.witness = Some(p);
                break;
            }
        }
    }

    let (x, y, maps) = chain_map(f, through + 1)?;
    let hx = x.homology(through)?;
    let hy = y.homology(through)?;
    let cone = mapping_cone(&x, &y, &maps)?;
    let hc = cone.homology(through)?;
    let all_cone_zero = hc.iter().all(HomologyGroup::is_zero);
    let homology: Vec<HomologyClause> = (0..=through)
        .map(|k| {
            let cone_vanishes = hc[k].is_zero();
            HomologyClause {
                k,
                rank: hx[k].rank,
                torsion: hx[k].torsion.clone(),
                target_rank: hy[k].rank,
                target_torsion: hy[k].torsion.clone(),
                cone_vanishes,
                // H_k(f) is onto when the cone vanishes in degree k; onto plus
                // abstractly isomorphic means iso.
                iso: cone_vanishes && hx[k].isomorphic(&hy[k]),
            }
        })
        .collect();
    let passed = pi0_clause.bijective && pi1_clause.iso && all_cone_zero && homology.iter().all(|h| h.iso);
    Ok(CertifyReport { schema: SCHEMA_VERSION, through, pi0: pi0_clause, pi1: pi1_clause, homology, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FiniteGroup, SimplicialGroupoid};
    use crate::wbar::build_wbar;

    fn wbar_c2(n: usize) -> crate::simplicial::TruncatedSSet {
        build_wbar(&SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2).unwrap(), n), n).unwrap()
    }

    #[test]
    fn identity_passes() {
        let w = wbar_c2(3);
        let id = SimplicialMapData::new(w.clone(), w.clone(), (0..=3).map(|n| (0..w.count(n)).collect()).collect()).unwrap();
        let r = certify_equivalence(&id, 2).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.pi1.order, 2);
    }

    #[test]
    fn collapsing_to_a_point_fails_at_degree_one() {
        let w = wbar_c2(3);
        let f = SimplicialMapData::constant(w.clone(), w, 0).unwrap();
        let r = certify_equivalence(&f, 2).unwrap();
        assert!(!r.passed);
        assert!(r.homology[0].iso);
        assert!(!r.homology[1].iso);
        assert!(!r.pi1.iso);
    }

    #[test]
    fn report_round_trips() {
        let w = wbar_c2(2);
        let id = SimplicialMapData::new(w.clone(), w.clone(), (0..=2).map(|n| (0..w.count(n)).collect()).collect()).unwrap();
        let r = certify_equivalence(&id, 1).unwrap();
        assert_eq!(CertifyReport::from_json_str(&r.to_json_string()).unwrap(), r);
    }
}
