use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::delta::SimplicialOps;
use crate::{Error, Result, SCHEMA_VERSION};

/// A simplicial set stored levelwise up to `dim_cap`.
///
/// Simplices are dense ids per level. Faces are stored for levels `1..=N` and
/// degeneracies for levels `0..N`; asking for a degeneracy out of level `N`
/// is an error, never a silent truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSSet {
    dim_cap: usize,
    counts: Vec<usize>,
    /// `faces[n][i][x] = d_i x` for `x` at level `n`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][i][x] = s_i x` for `x` at level `n < dim_cap`.
    degens: Vec<Vec<Vec<usize>>>,
    labels: Vec<Vec<String>>,
}

/// One failed simplicial identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub relation: String,
    pub level: usize,
    pub simplex: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at level {} on simplex {}", self.relation, self.level, self.simplex)
    }
}

/// Eilenberg–Zilber normal form `x = s_{i₁} ⋯ s_{i_k} base` with
/// `i₁ > ⋯ > i_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EzDecomposition {
    pub word: Vec<usize>,
    pub base_level: usize,
    pub base: usize,
}

impl TruncatedSSet {
    pub fn from_tables(
        dim_cap: usize,
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
        labels: Vec<Vec<String>>,
    ) -> Result<Self> {
        let bad = |level: usize, index: usize, reason: String| Error::MalformedTable { level, index, reason };
        if counts.len() != dim_cap + 1 || faces.len() != dim_cap + 1 || degens.len() != dim_cap + 1 {
            return Err(bad(0, 0, format!("expected {} levels", dim_cap + 1)));
        }
        if labels.len() != dim_cap + 1 {
            return Err(bad(0, 0, "label table has wrong number of levels".into()));
        }
        for n in 0..=dim_cap {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != want_faces {
                return Err(bad(n, 0, format!("expected {want_faces} face maps, found {}", faces[n].len())));
            }
            for (i, table) in faces[n].iter().enumerate() {
                if table.len() != counts[n] {
                    return Err(bad(n, i, format!("face d{i} has {} entries for {} simplices", table.len(), counts[n])));
                }
                if let Some((x, &v)) = table.iter().enumerate().find(|(_, &v)| v >= counts[n - 1]) {
                    return Err(bad(n, x, format!("face d{i} points at missing simplex {v}")));
                }
            }
            let want_degens = if n < dim_cap { n + 1 } else { 0 };
            if degens[n].len() != want_degens {
                return Err(bad(n, 0, format!("expected {want_degens} degeneracy maps, found {}", degens[n].len())));
            }
            for (i, table) in degens[n].iter().enumerate() {
                if table.len() != counts[n] {
                    return Err(bad(n, i, format!("degeneracy s{i} has {} entries for {} simplices", table.len(), counts[n])));
                }
                if let Some((x, &v)) = table.iter().enumerate().find(|(_, &v)| v >= counts[n + 1]) {
                    return Err(bad(n, x, format!("degeneracy s{i} points at missing simplex {v}")));
                }
            }
            if !labels[n].is_empty() && labels[n].len() != counts[n] {
                return Err(bad(n, 0, "label count does not match simplex count".into()));
            }
        }
        Ok(Self { dim_cap, counts, faces, degens, labels })
    }

    pub fn dim_cap(&self) -> usize {
        self.dim_cap
    }

    pub fn count(&self, n: usize) -> usize {
        self.counts[n]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn label(&self, n: usize, x: usize) -> Option<&str> {
        self.labels[n].get(x).map(String::as_str)
    }

    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degeneracy_table(&self, n: usize, i: usize) -> &[usize] {
        &self.degens[n][i]
    }

    /// `d_i x` for `x` at level `n ≥ 1`.
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    /// `s_i x` for `x` at level `n`; fails when `n + 1` exceeds the cap.
    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> Result<usize> {
        if n >= self.dim_cap {
            return Err(Error::Truncated { needed: n + 1, cap: self.dim_cap });
        }
        Ok(self.degens[n][i][x])
    }

    /// All faces of `x`, in order `d_0 x, …, d_n x`.
    pub fn faces_of(&self, n: usize, x: usize) -> Vec<usize> {
        (0..=n).map(|i| self.faces[n][i][x]).collect()
    }

    /// Checks every simplicial identity whose two sides are defined inside
    /// the truncation.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n_cap = self.dim_cap;
        // d_i d_j = d_{j-1} d_i, i < j
        for n in 2..=n_cap {
            for j in 0..=n {
                for i in 0..j {
                    for x in 0..self.counts[n] {
                        let lhs = self.faces[n - 1][i][self.faces[n][j][x]];
                        let rhs = self.faces[n - 1][j - 1][self.faces[n][i][x]];
                        if lhs != rhs {
                            out.push(Violation { relation: format!("d{i} d{j} = d{} d{i}", j - 1), level: n, simplex: x });
                        }
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i, i <= j
        for n in 0..n_cap.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    for x in 0..self.counts[n] {
                        let lhs = self.degens[n + 1][i][self.degens[n][j][x]];
                        let rhs = self.degens[n + 1][j + 1][self.degens[n][i][x]];
                        if lhs != rhs {
                            out.push(Violation { relation: format!("s{i} s{j} = s{} s{i}", j + 1), level: n, simplex: x });
                        }
                    }
                }
            }
        }
        // mixed relations d_i s_j on level n, result at level n
        for n in 0..n_cap {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    for x in 0..self.counts[n] {
                        let lhs = self.faces[n + 1][i][self.degens[n][j][x]];
                        let (rhs, relation) = if i < j {
                            (self.degens[n - 1][j - 1][self.faces[n][i][x]], format!("d{i} s{j} = s{} d{i}", j - 1))
                        } else if i == j || i == j + 1 {
                            (x, format!("d{i} s{j} = id"))
                        } else {
                            (self.degens[n - 1][j][self.faces[n][i - 1][x]], format!("d{i} s{j} = s{j} d{}", i - 1))
                        };
                        if lhs != rhs {
                            out.push(Violation { relation, level: n, simplex: x });
                        }
                    }
                }
            }
        }
        out
    }

    /// `Some(i)` for the largest `i` with `x = s_i d_i x`; `None` when `x` is
    /// nondegenerate.
    pub fn degenerate_index(&self, n: usize, x: usize) -> Option<usize> {
        if n == 0 {
            return None;
        }
        (0..n).rev().find(|&i| self.degens[n - 1][i][self.faces[n][i][x]] == x)
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        self.degenerate_index(n, x).is_some()
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.counts[n]).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    pub fn ez_decompose(&self, n: usize, x: usize) -> Result<EzDecomposition> {
        if n > self.dim_cap {
            return Err(Error::DimensionOutOfRange { requested: n, cap: self.dim_cap });
        }
        if x >= self.counts[n] {
            return Err(Error::MalformedTable { level: n, index: x, reason: "no such simplex".into() });
        }
        let mut word = Vec::new();
        let (mut level, mut cur) = (n, x);
        while let Some(i) = self.degenerate_index(level, cur) {
            word.push(i);
            cur = self.faces[level][i][cur];
            level -= 1;
        }
        Ok(EzDecomposition { word, base_level: level, base: cur })
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(SSetDoc::from(self)).expect("sset serializes")
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&SSetDoc::from(self)).expect("sset serializes")
    }

    /// Parses, shape-checks and validates a simplicial set document.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: SSetDoc = serde_json::from_str(s)?;
        Self::from_doc(doc)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        let doc: SSetDoc = serde_json::from_value(v)?;
        Self::from_doc(doc)
    }

    fn from_doc(doc: SSetDoc) -> Result<Self> {
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Schema { expected: SCHEMA_VERSION, found: doc.schema });
        }
        let mut counts = Vec::new();
        let mut faces = Vec::new();
        let mut degens = Vec::new();
        let mut labels = Vec::new();
        for (expected, level) in doc.levels.into_iter().enumerate() {
            if level.n != expected {
                return Err(Error::MalformedTable { level: level.n, index: 0, reason: format!("expected level {expected}") });
            }
            counts.push(level.count);
            faces.push(level.faces);
            degens.push(level.degens);
            labels.push(level.labels);
        }
        let sset = Self::from_tables(doc.dim_cap, counts, faces, degens, labels)?;
        if let Some(v) = sset.validate().first() {
            return Err(Error::Validation(v.to_string()));
        }
        Ok(sset)
    }

    /// Renumbers every level by the given permutations (`perm[n][old] = new`).
    pub fn relabel(&self, perm: &[Vec<usize>]) -> TruncatedSSet {
        let n_cap = self.dim_cap;
        let mut faces = vec![Vec::new(); n_cap + 1];
        let mut degens = vec![Vec::new(); n_cap + 1];
        let mut labels = vec![Vec::new(); n_cap + 1];
        for n in 0..=n_cap {
            let permute = |table: &Vec<usize>, to: usize| {
                let mut out = vec![0; table.len()];
                for (old, &v) in table.iter().enumerate() {
                    out[perm[n][old]] = perm[to][v];
                }
                out
            };
            if n > 0 {
                faces[n] = self.faces[n].iter().map(|t| permute(t, n - 1)).collect();
            }
            if n < n_cap {
                degens[n] = self.degens[n].iter().map(|t| permute(t, n + 1)).collect();
            }
            if !self.labels[n].is_empty() {
                let mut l = vec![String::new(); self.counts[n]];
                for (old, s) in self.labels[n].iter().enumerate() {
                    l[perm[n][old]] = s.clone();
                }
                labels[n] = l;
            }
        }
        TruncatedSSet { dim_cap: n_cap, counts: self.counts.clone(), faces, degens, labels }
    }

    /// Overwrites one face entry. Only meant for building broken fixtures.
    #[doc(hidden)]
    pub fn corrupt_face(&mut self, n: usize, i: usize, x: usize, value: usize) {
        self.faces[n][i][x] = value;
    }
}

impl SimplicialOps for TruncatedSSet {
    fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        assert!(n < self.dim_cap, "degeneracy out of level {n} needs level {} beyond cap {}", n + 1, self.dim_cap);
        self.degens[n][i][x]
    }
}

#[derive(Serialize, Deserialize)]
struct SSetDoc {
    schema: u32,
    dim_cap: usize,
    levels: Vec<LevelDoc>,
}

#[derive(Serialize, Deserialize)]
struct LevelDoc {
    n: usize,
    count: usize,
    faces: Vec<Vec<usize>>,
    degens: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Vec<String>,
}

impl From<&TruncatedSSet> for SSetDoc {
    fn from(s: &TruncatedSSet) -> Self {
        SSetDoc {
            schema: SCHEMA_VERSION,
            dim_cap: s.dim_cap,
            levels: (0..=s.dim_cap)
                .map(|n| LevelDoc {
                    n,
                    count: s.counts[n],
                    faces: s.faces[n].clone(),
                    degens: s.degens[n].clone(),
                    labels: s.labels[n].clone(),
                })
                .collect(),
        }
    }
}

/// Assembles a truncated simplicial set from enumerated levels of keyed
/// items. Face and degeneracy closures return keys that must be present in
/// the adjacent level.
pub fn assemble<T, K>(
    levels: &[Vec<T>],
    key: impl Fn(&T) -> K,
    face: impl Fn(usize, usize, &T) -> K,
    degen: impl Fn(usize, usize, &T) -> K,
    label: impl Fn(&T) -> String,
) -> Result<TruncatedSSet>
where
    K: Hash + Eq + fmt::Debug,
{
    let dim_cap = levels.len() - 1;
    let index: Vec<HashMap<K, usize>> =
        levels.iter().map(|lvl| lvl.iter().enumerate().map(|(id, t)| (key(t), id)).collect()).collect();
    for (n, lvl) in levels.iter().enumerate() {
        if index[n].len() != lvl.len() {
            return Err(Error::Invariant(format!("duplicate keys at level {n}")));
        }
    }
    let lookup = |n: usize, k: K, what: &str, from: usize| -> Result<usize> {
        index[n].get(&k).copied().ok_or_else(|| {
            Error::Invariant(format!("{what} of simplex {from} lands outside level {n}: {k:?}"))
        })
    };
    let mut faces = vec![Vec::new(); dim_cap + 1];
    let mut degens = vec![Vec::new(); dim_cap + 1];
    for n in 0..=dim_cap {
        if n > 0 {
            for i in 0..=n {
                let table = levels[n]
                    .iter()
                    .enumerate()
                    .map(|(x, t)| lookup(n - 1, face(n, i, t), "face", x))
                    .collect::<Result<Vec<_>>>()?;
                faces[n].push(table);
            }
        }
        if n < dim_cap {
            for i in 0..=n {
                let table = levels[n]
                    .iter()
                    .enumerate()
                    .map(|(x, t)| lookup(n + 1, degen(n, i, t), "degeneracy", x))
                    .collect::<Result<Vec<_>>>()?;
                degens[n].push(table);
            }
        }
    }
    let counts = levels.iter().map(Vec::len).collect();
    let labels = levels.iter().map(|lvl| lvl.iter().map(&label).collect()).collect();
    TruncatedSSet::from_tables(dim_cap, counts, faces, degens, labels)
}
