use serde::{Deserialize, Serialize};

use super::group::FiniteGroup;
use crate::simplicial::{assemble, SimplicialOps, TruncatedSSet};
use crate::{Error, Result, SCHEMA_VERSION};

/// A finite groupoid: the `n`-arrows of a simplicial groupoid at one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidLevel {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    /// `compose[g][f] = g ∘ f`, defined when `src g = tgt f`.
    compose: Vec<Vec<Option<usize>>>,
    identity: Vec<usize>,
    inverse: Vec<usize>,
}

impl GroupoidLevel {
    pub fn new(
        objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
        identity: Vec<usize>,
    ) -> Result<Self> {
        let m = src.len();
        if tgt.len() != m || compose.len() != m || compose.iter().any(|r| r.len() != m) || identity.len() != objects {
            return Err(Error::InvalidGroupoid("table shapes disagree".into()));
        }
        if src.iter().chain(&tgt).any(|&x| x >= objects) || identity.iter().any(|&f| f >= m) {
            return Err(Error::InvalidGroupoid("table points outside its ranges".into()));
        }
        let mut inverse = vec![usize::MAX; m];
        for f in 0..m {
            let found = (0..m).find(|&g| {
                compose[g][f] == Some(identity[src[f]]) && compose[f][g] == Some(identity[tgt[f]])
            });
            inverse[f] = found.ok_or_else(|| Error::InvalidGroupoid(format!("arrow {f} is not invertible")))?;
        }
        let level = Self { objects, src, tgt, compose, identity, inverse };
        level.check_laws()?;
        Ok(level)
    }

    /// A group as a one-object groupoid; `g ∘ f = g·f`.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let m = g.order();
        Self {
            objects: 1,
            src: vec![0; m],
            tgt: vec![0; m],
            compose: (0..m).map(|a| (0..m).map(|b| Some(g.mul(a, b))).collect()).collect(),
            identity: vec![0],
            inverse: (0..m).map(|a| g.inv(a)).collect(),
        }
    }

    /// The groupoid with `objects` objects and a copy of `H` as every hom set,
    /// composing by multiplication. The arrow `(x, y, h) : x → y` is numbered
    /// `(x·objects + y)·|H| + h`.
    pub fn indiscrete_times(objects: usize, h: &FiniteGroup) -> Self {
        let o = h.order();
        let idx = |x: usize, y: usize, e: usize| (x * objects + y) * o + e;
        let m = objects * objects * o;
        let split = |f: usize| (f / o / objects, f / o % objects, f % o);
        let mut compose = vec![vec![None; m]; m];
        for (g, row) in compose.iter_mut().enumerate() {
            let (y2, z, b) = split(g);
            for (f, slot) in row.iter_mut().enumerate() {
                let (x, y, a) = split(f);
                if y == y2 {
                    *slot = Some(idx(x, z, h.mul(b, a)));
                }
            }
        }
        Self {
            objects,
            src: (0..m).map(|f| split(f).0).collect(),
            tgt: (0..m).map(|f| split(f).1).collect(),
            compose,
            identity: (0..objects).map(|x| idx(x, x, 0)).collect(),
            inverse: (0..m)
                .map(|f| {
                    let (x, y, a) = split(f);
                    idx(y, x, h.inv(a))
                })
                .collect(),
        }
    }

    fn check_laws(&self) -> Result<()> {
        let m = self.arrows();
        let err = |s: String| Err(Error::InvalidGroupoid(s));
        for x in 0..self.objects {
            let id = self.identity[x];
            if self.src[id] != x || self.tgt[id] != x {
                return err(format!("identity of object {x} is not a loop at {x}"));
            }
        }
        for f in 0..m {
            if self.compose(self.identity[self.tgt[f]], f) != Some(f) || self.compose(f, self.identity[self.src[f]]) != Some(f) {
                return err(format!("unit law fails at arrow {f}"));
            }
            for g in 0..m {
                let gf = self.compose[g][f];
                if gf.is_some() != (self.src[g] == self.tgt[f]) {
                    return err(format!("composite ({g}, {f}) defined on the wrong pairs"));
                }
                let Some(gf) = gf else { continue };
                if self.src[gf] != self.src[f] || self.tgt[gf] != self.tgt[g] {
                    return err(format!("composite ({g}, {f}) has wrong endpoints"));
                }
                for h in 0..m {
                    if let Some(hg) = self.compose[h][g] {
                        if self.compose[hg][f] != self.compose[h][gf] {
                            return err(format!("associativity fails at ({h}, {g}, {f})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.arrows()).filter(|&f| self.src[f] == x && self.tgt[f] == y).collect()
    }

    /// Connected components of the objects under the arrows.
    pub fn components(&self) -> usize {
        let mut comp: Vec<usize> = (0..self.objects).collect();
        fn root(c: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while c[r] != r {
                r = c[r];
            }
            c[x] = r;
            r
        }
        for f in 0..self.arrows() {
            let (a, b) = (root(&mut comp, self.src[f]), root(&mut comp, self.tgt[f]));
            comp[a] = b;
        }
        (0..self.objects).filter(|&x| root(&mut comp, x) == x).count()
    }
}

/// A levelwise-finite simplicial groupoid with a constant object set,
/// stored for degrees `0..=dim_cap`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialGroupoid {
    objects: usize,
    dim_cap: usize,
    levels: Vec<GroupoidLevel>,
    /// `faces[n][i][f] = d_i f` for an `n`-arrow `f`, `n ≥ 1`.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][i][f] = s_i f` for `n < dim_cap`.
    degens: Vec<Vec<Vec<usize>>>,
}

impl SimplicialGroupoid {
    /// Assembles the structure and runs the full invariant suite.
    pub fn new(
        levels: Vec<GroupoidLevel>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::InvalidGroupoid("no levels".into()));
        }
        let dim_cap = levels.len() - 1;
        let objects = levels[0].objects;
        if levels.iter().any(|l| l.objects != objects) {
            return Err(Error::InvalidGroupoid("object set varies between levels".into()));
        }
        let g = Self { objects, dim_cap, levels, faces, degens };
        let problems = g.validate();
        if let Some(p) = problems.first() {
            return Err(Error::InvalidGroupoid(p.clone()));
        }
        Ok(g)
    }

    /// Every level is `level`, all faces and degeneracies are identities.
    pub fn constant(level: GroupoidLevel, dim_cap: usize) -> Self {
        let m = level.arrows();
        let id_tables = |count: usize| vec![(0..m).collect::<Vec<_>>(); count];
        let faces = (0..=dim_cap).map(|n| if n == 0 { Vec::new() } else { id_tables(n + 1) }).collect();
        let degens = (0..=dim_cap).map(|n| if n < dim_cap { id_tables(n + 1) } else { Vec::new() }).collect();
        Self { objects: level.objects, dim_cap, levels: vec![level; dim_cap + 1], faces, degens }
    }

    /// The constant simplicial group on `h`, viewed as a one-object
    /// simplicial groupoid.
    pub fn constant_group(h: &FiniteGroup, dim_cap: usize) -> Self {
        Self::constant(GroupoidLevel::from_group(h), dim_cap)
    }

    /// Objects `{a, b}`, every hom set a copy of `h`, constant in the
    /// simplicial direction.
    pub fn two_object(h: &FiniteGroup, dim_cap: usize) -> Self {
        Self::constant(GroupoidLevel::indiscrete_times(2, h), dim_cap)
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn dim_cap(&self) -> usize {
        self.dim_cap
    }

    pub fn level(&self, n: usize) -> &GroupoidLevel {
        &self.levels[n]
    }

    pub fn arrows(&self, n: usize) -> usize {
        self.levels[n].arrows()
    }

    pub fn src(&self, n: usize, f: usize) -> usize {
        self.levels[n].src[f]
    }

    pub fn tgt(&self, n: usize, f: usize) -> usize {
        self.levels[n].tgt[f]
    }

    /// `g ∘ f` at degree `n`; panics when not composable.
    pub fn compose(&self, n: usize, g: usize, f: usize) -> usize {
        self.levels[n].compose[g][f].unwrap_or_else(|| panic!("{n}-arrows {g} and {f} are not composable"))
    }

    pub fn identity(&self, n: usize, x: usize) -> usize {
        self.levels[n].identity[x]
    }

    pub fn inverse(&self, n: usize, f: usize) -> usize {
        self.levels[n].inverse[f]
    }

    pub fn is_group(&self) -> bool {
        self.objects == 1
    }

    /// Runs the full invariant suite: groupoid laws per level, functoriality
    /// of faces and degeneracies, and the simplicial identities.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        let cap = self.dim_cap;
        if self.faces.len() != cap + 1 || self.degens.len() != cap + 1 {
            out.push("structure map tables have the wrong number of levels".into());
            return out;
        }
        for (n, level) in self.levels.iter().enumerate() {
            if let Err(e) = level.check_laws() {
                out.push(format!("level {n}: {e}"));
            }
        }
        let check_functor = |out: &mut Vec<String>, name: &str, from: usize, to: usize, table: &[usize]| {
            let (a, b) = (&self.levels[from], &self.levels[to]);
            if table.len() != a.arrows() || table.iter().any(|&v| v >= b.arrows()) {
                out.push(format!("{name} on level {from} has a malformed table"));
                return;
            }
            for f in 0..a.arrows() {
                if b.src[table[f]] != a.src[f] || b.tgt[table[f]] != a.tgt[f] {
                    out.push(format!("{name} on level {from} moves the endpoints of arrow {f}"));
                }
                for g in 0..a.arrows() {
                    if let Some(gf) = a.compose[g][f] {
                        if b.compose[table[g]][table[f]] != Some(table[gf]) {
                            out.push(format!("{name} on level {from} does not preserve {g} ∘ {f}"));
                        }
                    }
                }
            }
            for x in 0..self.objects {
                if table[a.identity[x]] != b.identity[x] {
                    out.push(format!("{name} on level {from} does not preserve the identity of {x}"));
                }
            }
        };
        for n in 0..=cap {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            let want_degens = if n < cap { n + 1 } else { 0 };
            if self.faces[n].len() != want_faces || self.degens[n].len() != want_degens {
                out.push(format!("level {n} has the wrong number of structure maps"));
                return out;
            }
            for i in 0..want_faces {
                check_functor(&mut out, &format!("d{i}"), n, n - 1, &self.faces[n][i]);
            }
            for i in 0..want_degens {
                check_functor(&mut out, &format!("s{i}"), n, n + 1, &self.degens[n][i]);
            }
        }
        if !out.is_empty() {
            return out;
        }
        match self.arrows_sset() {
            Ok(s) => out.extend(s.validate().into_iter().map(|v| format!("arrows: {v}"))),
            Err(e) => out.push(e.to_string()),
        }
        out
    }

    /// The simplicial set of all arrows (degree `n` arrows at level `n`).
    pub fn arrows_sset(&self) -> Result<TruncatedSSet> {
        self.restricted_sset(|_, _| true)
    }

    /// The hom simplicial set `𝒢(x, y)`, arrows renumbered densely per level
    /// in increasing order of their global id.
    pub fn hom_sset(&self, x: usize, y: usize) -> Result<TruncatedSSet> {
        self.restricted_sset(|lvl, f| lvl.src[f] == x && lvl.tgt[f] == y)
    }

    fn restricted_sset(&self, keep: impl Fn(&GroupoidLevel, usize) -> bool) -> Result<TruncatedSSet> {
        let levels: Vec<Vec<usize>> =
            self.levels.iter().map(|l| (0..l.arrows()).filter(|&f| keep(l, f)).collect()).collect();
        assemble(
            &levels,
            |&f| f,
            |n, i, &f| self.faces[n][i][f],
            |n, i, &f| self.degens[n][i][f],
            |f| f.to_string(),
        )
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GroupoidDoc { schema: SCHEMA_VERSION, groupoid: self.clone() }).expect("groupoid serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: GroupoidDoc = serde_json::from_str(s)?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Schema { expected: SCHEMA_VERSION, found: doc.schema });
        }
        let g = doc.groupoid;
        Self::new(g.levels, g.faces, g.degens)
    }
}

impl SimplicialOps for SimplicialGroupoid {
    fn face(&self, n: usize, i: usize, f: usize) -> usize {
        self.faces[n][i][f]
    }

    fn degen(&self, n: usize, i: usize, f: usize) -> usize {
        assert!(n < self.dim_cap, "degeneracy of a {n}-arrow needs degree {} beyond cap {}", n + 1, self.dim_cap);
        self.degens[n][i][f]
    }
}

#[derive(Serialize, Deserialize)]
struct GroupoidDoc {
    schema: u32,
    #[serde(flatten)]
    groupoid: SimplicialGroupoid,
}

/// A simplicial functor `𝒢 → ℋ`: an object map and one arrow map per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidFunctorData {
    pub objects: Vec<usize>,
    pub arrows: Vec<Vec<usize>>,
}

impl GroupoidFunctorData {
    pub fn identity(g: &SimplicialGroupoid) -> Self {
        Self {
            objects: (0..g.objects()).collect(),
            arrows: (0..=g.dim_cap()).map(|n| (0..g.arrows(n)).collect()).collect(),
        }
    }

    /// Induced by a homomorphism between the underlying groups of two
    /// constant simplicial groups.
    pub fn from_group_hom(source: &FiniteGroup, target: &FiniteGroup, f: &[usize], dim_cap: usize) -> Result<Self> {
        if !source.is_homomorphism_to(target, f) {
            return Err(Error::InvalidGroup("map is not a homomorphism".into()));
        }
        Ok(Self { objects: vec![0], arrows: vec![f.to_vec(); dim_cap + 1] })
    }

    /// Violations of functoriality and simpliciality.
    pub fn validate(&self, source: &SimplicialGroupoid, target: &SimplicialGroupoid) -> Vec<String> {
        let mut out = Vec::new();
        let cap = source.dim_cap().min(target.dim_cap());
        if self.objects.len() != source.objects() || self.objects.iter().any(|&y| y >= target.objects()) {
            out.push("object map is malformed".into());
            return out;
        }
        if self.arrows.len() < cap + 1 {
            out.push("arrow maps missing for some degrees".into());
            return out;
        }
        for n in 0..=cap {
            let (a, b, map) = (source.level(n), target.level(n), &self.arrows[n]);
            if map.len() != a.arrows() || map.iter().any(|&v| v >= b.arrows()) {
                out.push(format!("arrow map in degree {n} is malformed"));
                continue;
            }
            for f in 0..a.arrows() {
                if b.src(map[f]) != self.objects[a.src(f)] || b.tgt(map[f]) != self.objects[a.tgt(f)] {
                    out.push(format!("degree {n}: arrow {f} lands in the wrong hom set"));
                }
                for g in 0..a.arrows() {
                    if let Some(gf) = a.compose(g, f) {
                        if b.compose(map[g], map[f]) != Some(map[gf]) {
                            out.push(format!("degree {n}: composition {g} ∘ {f} not preserved"));
                        }
                    }
                }
                if n > 0 {
                    for i in 0..=n {
                        if self.arrows[n - 1][source.face(n, i, f)] != target.face(n, i, map[f]) {
                            out.push(format!("degree {n}: d{i} not preserved at {f}"));
                        }
                    }
                }
                if n < cap {
                    for i in 0..=n {
                        if self.arrows[n + 1][source.degen(n, i, f)] != target.degen(n, i, map[f]) {
                            out.push(format!("degree {n}: s{i} not preserved at {f}"));
                        }
                    }
                }
            }
            for x in 0..source.objects() {
                if map[a.identity(x)] != b.identity(self.objects[x]) {
                    out.push(format!("degree {n}: identity of {x} not preserved"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::is_kan;

    #[test]
    fn constant_c2_has_two_arrows_everywhere() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let g = SimplicialGroupoid::constant_group(&c2, 4);
        assert!((0..=4).all(|n| g.arrows(n) == 2));
        for n in 1..=4 {
            for i in 0..=n {
                assert!((0..2).all(|f| g.face(n, i, f) == f));
            }
        }
        assert!(g.validate().is_empty());
    }

    #[test]
    fn two_object_groupoid() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let g = SimplicialGroupoid::two_object(&c2, 3);
        assert_eq!(g.level(0).hom(0, 1).len(), 2);
        assert_eq!(g.level(0).components(), 1);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn hom_sets_are_kan() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let g = SimplicialGroupoid::two_object(&s3, 3);
        for x in 0..2 {
            let hom = g.hom_sset(x, x).unwrap();
            assert!(is_kan(&hom, 2).unwrap().kan);
        }
    }

    #[test]
    fn broken_face_functor_is_caught() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let good = SimplicialGroupoid::constant_group(&c2, 2);
        let mut faces = good.faces.clone();
        faces[1][0] = vec![1, 1];
        assert!(SimplicialGroupoid::new(good.levels.clone(), faces, good.degens.clone()).is_err());
    }

    #[test]
    fn functor_data_from_quotient() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let f = GroupoidFunctorData::from_group_hom(&c4, &c2, &[0, 1, 0, 1], 3).unwrap();
        let (a, b) = (SimplicialGroupoid::constant_group(&c4, 3), SimplicialGroupoid::constant_group(&c2, 3));
        assert!(f.validate(&a, &b).is_empty());
        assert!(GroupoidFunctorData::from_group_hom(&c4, &c2, &[0, 1, 1, 1], 3).is_err());
        assert!(GroupoidFunctorData::identity(&a).validate(&a, &a).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let g = SimplicialGroupoid::two_object(&c3, 2);
        let back = SimplicialGroupoid::from_json_str(&g.to_json_string()).unwrap();
        assert_eq!(back, g);
    }
}
