use serde::{Deserialize, Serialize};

use super::sset::{TruncatedSSet, Violation};
use crate::{Error, Result, SCHEMA_VERSION};

/// A levelwise assignment between two truncated simplicial sets, defined on
/// levels `0..=min(caps)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMapData {
    source: TruncatedSSet,
    target: TruncatedSSet,
    assignment: Vec<Vec<usize>>,
}

impl SimplicialMapData {
    pub fn new(source: TruncatedSSet, target: TruncatedSSet, assignment: Vec<Vec<usize>>) -> Result<Self> {
        let cap = source.dim_cap().min(target.dim_cap());
        if assignment.len() != cap + 1 {
            return Err(Error::MalformedTable { level: 0, index: 0, reason: format!("map needs {} levels", cap + 1) });
        }
        for (n, level) in assignment.iter().enumerate() {
            if level.len() != source.count(n) {
                return Err(Error::MalformedTable { level: n, index: 0, reason: "assignment length differs from source".into() });
            }
            if let Some(x) = level.iter().position(|&y| y >= target.count(n)) {
                return Err(Error::MalformedTable { level: n, index: x, reason: "image is not a target simplex".into() });
            }
        }
        Ok(Self { source, target, assignment })
    }

    /// The map sending every simplex to the iterated degeneracy of `vertex`.
    pub fn constant(source: TruncatedSSet, target: TruncatedSSet, vertex: usize) -> Result<Self> {
        let cap = source.dim_cap().min(target.dim_cap());
        let mut point = vertex;
        let mut assignment = Vec::new();
        for n in 0..=cap {
            if n > 0 {
                point = target.degeneracy(n - 1, 0, point)?;
            }
            assignment.push(vec![point; source.count(n)]);
        }
        Self::new(source, target, assignment)
    }

    pub fn source(&self) -> &TruncatedSSet {
        &self.source
    }

    pub fn target(&self) -> &TruncatedSSet {
        &self.target
    }

    pub fn dim_cap(&self) -> usize {
        self.assignment.len() - 1
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.assignment[n][x]
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.assignment[n]
    }

    /// Faces and degeneracies that fail to commute with the map.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let cap = self.dim_cap();
        for n in 0..=cap {
            for x in 0..self.source.count(n) {
                let fx = self.assignment[n][x];
                if n > 0 {
                    for i in 0..=n {
                        if self.assignment[n - 1][self.source.face(n, i, x)] != self.target.face(n, i, fx) {
                            out.push(Violation { relation: format!("f d{i} = d{i} f"), level: n, simplex: x });
                        }
                    }
                }
                if n < cap {
                    for i in 0..=n {
                        let lhs = self.assignment[n + 1][self.source.degeneracy(n, i, x).expect("n < cap")];
                        let rhs = self.target.degeneracy(n, i, fx).expect("n < cap");
                        if lhs != rhs {
                            out.push(Violation { relation: format!("f s{i} = s{i} f"), level: n, simplex: x });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_levelwise_bijective(&self) -> bool {
        (0..=self.dim_cap()).all(|n| {
            if self.source.count(n) != self.target.count(n) {
                return false;
            }
            let mut seen = vec![false; self.target.count(n)];
            self.assignment[n].iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
    }

    pub fn is_levelwise_surjective(&self) -> bool {
        (0..=self.dim_cap()).all(|n| {
            let mut seen = vec![false; self.target.count(n)];
            for &y in &self.assignment[n] {
                seen[y] = true;
            }
            seen.into_iter().all(|b| b)
        })
    }

    /// `true` when the map is a levelwise bijection commuting with all
    /// structure maps.
    pub fn is_isomorphism(&self) -> bool {
        self.is_levelwise_bijective() && self.validate().is_empty()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&MapDoc {
            schema: SCHEMA_VERSION,
            source: self.source.to_json_value(),
            target: self.target.to_json_value(),
            assignment: self.assignment.clone(),
        })
        .expect("map serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: MapDoc = serde_json::from_str(s)?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Schema { expected: SCHEMA_VERSION, found: doc.schema });
        }
        let source = TruncatedSSet::from_json_value(doc.source)?;
        let target = TruncatedSSet::from_json_value(doc.target)?;
        let map = Self::new(source, target, doc.assignment)?;
        if let Some(v) = map.validate().first() {
            return Err(Error::Validation(v.to_string()));
        }
        Ok(map)
    }
}

#[derive(Serialize, Deserialize)]
struct MapDoc {
    schema: u32,
    source: serde_json::Value,
    target: serde_json::Value,
    assignment: Vec<Vec<usize>>,
}
