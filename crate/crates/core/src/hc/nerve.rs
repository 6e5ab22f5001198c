//! The homotopy coherent nerve `N𝒢`, enumerated level by level as the set of
//! simplicial functors `C̃[Δⁿ] → 𝒢`.
//!
//! A functor is fixed by its objects and its values on the nondegenerate
//! chains of every `N(P_{i,j}^op)`. Chains whose last set is `{i, j}` are
//! free, subject only to their faces; every other chain splits at the first
//! interior point `m` of its last set, and its value is forced to be
//! `F(c ∩ [m, j]) ∘ F(c ∩ [i, m])`.

use std::collections::HashMap;

use super::poset::{alpha_push, first_repeat, max_of, min_of, product_simplices, restrict, split_point, CTildeCat, Subset};
use crate::groups::SimplicialGroupoid;
use crate::simplicial::{assemble, MonotoneMap, SimplicialOps, TruncatedSSet};
use crate::{Error, Result};

/// Default cap on the number of candidate values tried per level.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Largest truncation the nerve is built to.
pub const MAX_NERVE_DIM: usize = 6;

/// The nondegenerate chains of `C̃[Δⁿ]` with `i < j`, numbered.
#[derive(Clone, Debug)]
pub struct ChainTable {
    pub n: usize,
    pub chains: Vec<Vec<Subset>>,
    position: HashMap<Vec<Subset>, usize>,
}

impl ChainTable {
    pub fn new(n: usize) -> Result<Self> {
        let chains = CTildeCat::new(n)?.nondegenerate_chains();
        let position = chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Ok(Self { n, chains, position })
    }

    pub fn position(&self, chain: &[Subset]) -> Option<usize> {
        self.position.get(chain).copied()
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }
}

/// A simplicial functor `C̃[Δⁿ] → 𝒢`: objects `x_0..=x_n` and one value per
/// entry of the level's [`ChainTable`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HcFunctor {
    pub objects: Vec<usize>,
    pub values: Vec<usize>,
}

impl HcFunctor {
    pub fn n(&self) -> usize {
        self.objects.len() - 1
    }

    /// The value on any chain `I₀ ⊇ ⋯ ⊇ I_k` of some `P_{a,b}`, degenerate
    /// or not; `a = b` gives an identity.
    pub fn eval(&self, g: &SimplicialGroupoid, table: &ChainTable, chain: &[Subset]) -> usize {
        eval_partial(g, table, &self.objects, &self.values, chain)
    }

    /// `F ∘ α_*` for `α : [p] → [n]`.
    pub fn precompose(&self, g: &SimplicialGroupoid, table: &ChainTable, alpha: &MonotoneMap, source: &ChainTable) -> HcFunctor {
        let objects = alpha.values().iter().map(|&v| self.objects[v]).collect();
        let values = source.chains.iter().map(|c| self.eval(g, table, &alpha_push(alpha, c))).collect();
        HcFunctor { objects, values }
    }

    pub fn label(&self) -> String {
        let o: Vec<String> = self.objects.iter().map(usize::to_string).collect();
        let v: Vec<String> = self.values.iter().map(usize::to_string).collect();
        format!("{}|{}", o.join(","), v.join(","))
    }
}

const UNSET: usize = usize::MAX;

fn eval_partial(g: &SimplicialGroupoid, table: &ChainTable, objects: &[usize], values: &[usize], chain: &[Subset]) -> usize {
    let k = chain.len() - 1;
    let (a, b) = (min_of(chain[0]), max_of(chain[0]));
    if a == b {
        return g.identity(k, objects[a]);
    }
    if let Some(t) = first_repeat(chain) {
        let mut shorter = chain.to_vec();
        shorter.remove(t + 1);
        let inner = eval_partial(g, table, objects, values, &shorter);
        return g.degen(k - 1, t, inner);
    }
    let pos = table.position(chain).unwrap_or_else(|| panic!("chain {chain:?} is not in C̃[Δ^{}]", table.n));
    let v = values[pos];
    debug_assert_ne!(v, UNSET, "chain {chain:?} read before it was assigned");
    v
}

#[derive(Clone, Debug)]
enum Step {
    /// Value drawn from the arrows whose faces are the listed chains' values
    /// (or, in degree 0, from the hom set).
    Free { pos: usize, dim: usize, faces: Vec<Vec<Subset>>, ends: (usize, usize) },
    /// Value forced by composition through `m`.
    Forced { pos: usize, m: usize },
}

/// Enumeration counters for one level.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub candidates: u64,
    /// Complete assignments that failed the functor checks. Expected zero.
    pub rejected: u64,
}

struct Fillers {
    /// `by_faces[k]` maps the face tuple of a degree-`k` arrow to the arrows.
    by_faces: Vec<HashMap<Vec<usize>, Vec<usize>>>,
}

impl Fillers {
    fn new(g: &SimplicialGroupoid, top: usize) -> Self {
        let by_faces = (0..=top)
            .map(|k| {
                let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                for f in 0..g.arrows(k) {
                    let key = if k == 0 { vec![g.src(0, f), g.tgt(0, f)] } else { (0..=k).map(|i| g.face(k, i, f)).collect() };
                    m.entry(key).or_default().push(f);
                }
                m
            })
            .collect();
        Self { by_faces }
    }
}

struct LevelEnumerator<'a> {
    g: &'a SimplicialGroupoid,
    table: &'a ChainTable,
    steps: Vec<Step>,
    fillers: &'a Fillers,
    products: Vec<(Vec<Subset>, Vec<Subset>)>,
    budget: u64,
    stats: LevelStats,
    found: Vec<HcFunctor>,
}

impl LevelEnumerator<'_> {
    fn run(&mut self, objects: &[usize]) -> Result<()> {
        let mut values = vec![UNSET; self.table.len()];
        self.descend(objects, &mut values, 0)
    }

    fn descend(&mut self, objects: &[usize], values: &mut Vec<usize>, step: usize) -> Result<()> {
        let Some(s) = self.steps.get(step).cloned() else {
            if self.is_functor(objects, values) {
                self.found.push(HcFunctor { objects: objects.to_vec(), values: values.clone() });
            } else {
                self.stats.rejected += 1;
            }
            return Ok(());
        };
        match s {
            Step::Forced { pos, m } => {
                let c = &self.table.chains[pos];
                let b = max_of(c[0]);
                let a = min_of(c[0]);
                let k = c.len() - 1;
                let upper = eval_partial(self.g, self.table, objects, values, &restrict(c, m, b));
                let lower = eval_partial(self.g, self.table, objects, values, &restrict(c, a, m));
                values[pos] = self.g.compose(k, upper, lower);
                self.descend(objects, values, step + 1)?;
                values[pos] = UNSET;
            }
            Step::Free { pos, dim, faces, ends } => {
                let key: Vec<usize> = if dim == 0 {
                    vec![objects[ends.0], objects[ends.1]]
                } else {
                    faces.iter().map(|f| eval_partial(self.g, self.table, objects, values, f)).collect()
                };
                let options = self.fillers.by_faces[dim].get(&key).cloned().unwrap_or_default();
                for v in options {
                    self.stats.candidates += 1;
                    if self.stats.candidates > self.budget {
                        return Err(Error::BudgetExceeded { level: self.table.n, cap: self.budget });
                    }
                    values[pos] = v;
                    self.descend(objects, values, step + 1)?;
                }
                values[pos] = UNSET;
            }
        }
        Ok(())
    }

    /// Face compatibility on every nondegenerate chain and the composition
    /// law on every nondegenerate simplex of every `P_{a,m} × P_{m,b}`.
    fn is_functor(&self, objects: &[usize], values: &[usize]) -> bool {
        let g = self.g;
        for (pos, c) in self.table.chains.iter().enumerate() {
            let k = c.len() - 1;
            let v = values[pos];
            if g.src(k, v) != objects[min_of(c[0])] || g.tgt(k, v) != objects[max_of(c[0])] {
                return false;
            }
            for i in (0..=k).filter(|_| k > 0) {
                let mut face = c.clone();
                face.remove(i);
                if eval_partial(g, self.table, objects, values, &face) != g.face(k, i, v) {
                    return false;
                }
            }
        }
        self.products.iter().all(|(u, w)| {
            let k = u.len() - 1;
            let whole: Vec<Subset> = u.iter().zip(w).map(|(x, y)| x | y).collect();
            let lhs = eval_partial(g, self.table, objects, values, &whole);
            let rhs = g.compose(
                k,
                eval_partial(g, self.table, objects, values, w),
                eval_partial(g, self.table, objects, values, u),
            );
            lhs == rhs
        })
    }
}

fn plan(table: &ChainTable) -> Vec<Step> {
    table
        .chains
        .iter()
        .enumerate()
        .map(|(pos, c)| match split_point(c) {
            Some(m) => Step::Forced { pos, m },
            None => {
                let k = c.len() - 1;
                let faces = if k == 0 {
                    Vec::new()
                } else {
                    (0..=k)
                        .map(|i| {
                            let mut f = c.clone();
                            f.remove(i);
                            f
                        })
                        .collect()
                };
                Step::Free { pos, dim: k, faces, ends: (min_of(c[0]), max_of(c[0])) }
            }
        })
        .collect()
}

/// All functors `C̃[Δⁿ] → 𝒢`, sorted.
pub fn enumerate_hc_functors(g: &SimplicialGroupoid, n: usize, budget: u64) -> Result<(Vec<HcFunctor>, LevelStats)> {
    let table = ChainTable::new(n)?;
    let fillers = Fillers::new(g, n.saturating_sub(1).min(g.dim_cap()));
    enumerate_with(g, &table, &fillers, budget)
}

fn enumerate_with(g: &SimplicialGroupoid, table: &ChainTable, fillers: &Fillers, budget: u64) -> Result<(Vec<HcFunctor>, LevelStats)> {
    let n = table.n;
    if n > 0 && n - 1 > g.dim_cap() {
        return Err(Error::Truncated { needed: n - 1, cap: g.dim_cap() });
    }
    let mut products = Vec::new();
    for a in 0..=n {
        for b in a + 2..=n {
            for m in a + 1..b {
                products.extend(product_simplices(n, a, m, b)?);
            }
        }
    }
    let mut e = LevelEnumerator {
        g,
        table,
        steps: plan(table),
        fillers,
        products,
        budget,
        stats: LevelStats::default(),
        found: Vec::new(),
    };
    let objs = g.objects();
    let total = objs.pow(n as u32 + 1);
    for code in 0..total {
        let mut rest = code;
        let mut objects = vec![0; n + 1];
        for slot in objects.iter_mut().rev() {
            *slot = rest % objs;
            rest /= objs;
        }
        e.run(&objects)?;
    }
    let mut found = e.found;
    found.sort_unstable();
    Ok((found, e.stats))
}

/// `N𝒢` through level `dim_cap`, with the enumerated functors kept for
/// lookups.
#[derive(Clone, Debug)]
pub struct HcNerve {
    pub sset: TruncatedSSet,
    pub tables: Vec<ChainTable>,
    pub levels: Vec<Vec<HcFunctor>>,
    pub stats: Vec<LevelStats>,
    index: Vec<HashMap<HcFunctor, usize>>,
}

impl HcNerve {
    pub fn dim_cap(&self) -> usize {
        self.sset.dim_cap()
    }

    pub fn index_of(&self, f: &HcFunctor) -> Option<usize> {
        self.index.get(f.n())?.get(f).copied()
    }

    pub fn functor(&self, n: usize, x: usize) -> &HcFunctor {
        &self.levels[n][x]
    }
}

/// Builds `N𝒢` on levels `0..=dim_cap`. Exceeding `budget` candidate values
/// on any level is an error rather than a silent truncation.
pub fn build_nerve_data(g: &SimplicialGroupoid, dim_cap: usize, budget: u64) -> Result<HcNerve> {
    if dim_cap > MAX_NERVE_DIM {
        return Err(Error::DimensionOutOfRange { requested: dim_cap, cap: MAX_NERVE_DIM });
    }
    if dim_cap > g.dim_cap() {
        return Err(Error::Truncated { needed: dim_cap, cap: g.dim_cap() });
    }
    let fillers = Fillers::new(g, dim_cap.saturating_sub(1));
    let tables: Vec<ChainTable> = (0..=dim_cap).map(ChainTable::new).collect::<Result<_>>()?;
    let mut levels = Vec::new();
    let mut stats = Vec::new();
    for table in &tables {
        let (found, s) = enumerate_with(g, table, &fillers, budget)?;
        levels.push(found);
        stats.push(s);
    }
    let sset = assemble(
        &levels,
        HcFunctor::clone,
        |n, i, f| f.precompose(g, &tables[n], &MonotoneMap::coface(n, i), &tables[n - 1]),
        |n, i, f| f.precompose(g, &tables[n], &MonotoneMap::codegeneracy(n, i), &tables[n + 1]),
        HcFunctor::label,
    )?;
    let index = levels.iter().map(|lvl| lvl.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()).collect();
    Ok(HcNerve { sset, tables, levels, stats, index })
}

pub fn build_nerve(g: &SimplicialGroupoid, dim_cap: usize) -> Result<TruncatedSSet> {
    Ok(build_nerve_data(g, dim_cap, DEFAULT_BUDGET)?.sset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;

    #[test]
    fn constant_group_levels_are_powers() {
        let h = FiniteGroup::cyclic(3).unwrap();
        let g = SimplicialGroupoid::constant_group(&h, 3);
        let nerve = build_nerve_data(&g, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(nerve.sset.counts(), &[1, 3, 9, 27]);
        assert!(nerve.stats.iter().all(|s| s.rejected == 0));
        assert!(nerve.sset.validate().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let h = FiniteGroup::symmetric(3).unwrap();
        let g = SimplicialGroupoid::constant_group(&h, 3);
        assert!(matches!(build_nerve_data(&g, 3, 10), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn chain_table_sizes() {
        let sizes: Vec<usize> = (0..=4).map(|n| ChainTable::new(n).unwrap().len()).collect();
        // intervals of length 1, 2, 3, 4 carry 1, 3, 11, 51 chains
        assert_eq!(sizes, vec![0, 1, 2 + 3, 3 + 2 * 3 + 11, 4 + 3 * 3 + 2 * 11 + 51]);
    }
}
