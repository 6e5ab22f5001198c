//! The total space `W = G ×_τ W̄G` of a simplicial group, its projection to
//! `W̄G`, and the right `G`-action.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{build_wbar, wbar_simplices, WBarSimplex};
use crate::groups::SimplicialGroupoid;
use crate::invariants::{homology, pi0, pi1};
use crate::simplicial::{assemble, is_kan_fibration, KanReport, SimplicialMapData, SimplicialOps, TruncatedSSet};
use crate::{Error, Result};

/// Where the twisting arrow enters the faces of `W`, and on which side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwistConvention {
    /// `d₀(h; y) = (g_{n−1} · d₀h; d₀y)`.
    D0Left,
    /// `d₀(h; y) = (d₀h · g_{n−1}; d₀y)`.
    D0Right,
    /// `d_n(h; y) = (s₀ⁿ⁻¹g₀ · d_n h; d_n y)`.
    DnLeft,
    /// `d_n(h; y) = (d_n h · s₀ⁿ⁻¹g₀; d_n y)`.
    DnRight,
}

impl TwistConvention {
    pub const ALL: [TwistConvention; 4] =
        [TwistConvention::D0Left, TwistConvention::D0Right, TwistConvention::DnLeft, TwistConvention::DnRight];
}

/// The convention used by [`build_w_total`]. With right actions and the
/// tuple order of `W̄` used here, the twist sits in `d₀` and multiplies by
/// the last arrow from the left; the tests pin this choice.
pub const TWIST: TwistConvention = TwistConvention::D0Left;

/// `W` with its projection and action. The simplex `(h; y)` at level `n` is
/// numbered `y · |G_n| + h`.
#[derive(Clone, Debug)]
pub struct TotalSpace {
    pub total: TruncatedSSet,
    pub projection: SimplicialMapData,
    /// `action[n][x · |G_n| + k] = x · k`.
    action: Vec<Vec<usize>>,
    group_orders: Vec<usize>,
    convention: TwistConvention,
    group: SimplicialGroupoid,
}

impl TotalSpace {
    pub fn convention(&self) -> TwistConvention {
        self.convention
    }

    pub fn group_order(&self, n: usize) -> usize {
        self.group_orders[n]
    }

    /// `x · k` for `x ∈ W_n`, `k ∈ G_n`.
    pub fn act(&self, n: usize, x: usize, k: usize) -> usize {
        self.action[n][x * self.group_orders[n] + k]
    }

    pub fn action_table(&self, n: usize) -> &[usize] {
        &self.action[n]
    }

    /// Overwrites one action entry. Only meant for building broken fixtures.
    #[doc(hidden)]
    pub fn corrupt_action(&mut self, n: usize, x: usize, k: usize, value: usize) {
        self.action[n][x * self.group_orders[n] + k] = value;
    }
}

fn twisted_face(g: &SimplicialGroupoid, conv: TwistConvention, n: usize, i: usize, h: usize, y: &WBarSimplex) -> usize {
    let dh = g.face(n, i, h);
    let top = || y.arrows[n - 1];
    let bottom = || (0..n - 1).fold(y.arrows[0], |acc, d| g.degen(d, 0, acc));
    match (conv, i) {
        (TwistConvention::D0Left, 0) => g.compose(n - 1, top(), dh),
        (TwistConvention::D0Right, 0) => g.compose(n - 1, dh, top()),
        (TwistConvention::DnLeft, i) if i == n => g.compose(n - 1, bottom(), dh),
        (TwistConvention::DnRight, i) if i == n => g.compose(n - 1, dh, bottom()),
        _ => dh,
    }
}

/// Builds `W` for a one-object `𝒢` with an explicit twist convention,
/// without checking the principal-fibration contract.
pub fn build_w_total_with(g: &SimplicialGroupoid, dim_cap: usize, conv: TwistConvention) -> Result<TotalSpace> {
    if !g.is_group() {
        return Err(Error::Precondition("the total space is only built for simplicial groups".into()));
    }
    // level n uses G_n and degeneracies out of it, so 𝒢 must reach dim_cap
    let wbar = build_wbar(g, dim_cap)?;
    let bases: Vec<Vec<WBarSimplex>> = (0..=dim_cap).map(|n| wbar_simplices(g, n)).collect();
    let orders: Vec<usize> = (0..=dim_cap).map(|n| g.arrows(n)).collect();
    let levels: Vec<Vec<(usize, usize)>> =
        (0..=dim_cap).map(|n| (0..bases[n].len()).flat_map(|y| (0..orders[n]).map(move |h| (y, h))).collect()).collect();
    let total = assemble(
        &levels,
        |&(y, h)| (y, h),
        |n, i, &(y, h)| (wbar.face(n, i, y), twisted_face(g, conv, n, i, h, &bases[n][y])),
        |n, i, &(y, h)| (wbar.degeneracy(n, i, y).expect("below cap"), g.degen(n, i, h)),
        |&(y, h)| format!("{h};{y}"),
    )?;
    let assignment = levels.iter().map(|lvl| lvl.iter().map(|&(y, _)| y).collect()).collect();
    let projection = SimplicialMapData::new(total.clone(), wbar, assignment)?;
    let action = (0..=dim_cap)
        .map(|n| {
            let o = orders[n];
            (0..total.count(n)).flat_map(|x| (0..o).map(move |k| (x / o) * o + g.compose(n, x % o, k))).collect()
        })
        .collect();
    Ok(TotalSpace { total, projection, action, group_orders: orders, convention: conv, group: g.clone() })
}

/// Builds `W` with the documented [`TWIST`] convention and checks that it is
/// a simplicial set carrying a free action with quotient `W̄G`. A failure
/// names the conventions that would have passed.
pub fn build_w_total(g: &SimplicialGroupoid, dim_cap: usize) -> Result<TotalSpace> {
    let w = build_w_total_with(g, dim_cap, TWIST)?;
    let problems = structural_failures(&w);
    if problems.is_empty() {
        return Ok(w);
    }
    let passing: Vec<String> = TwistConvention::ALL
        .iter()
        .filter(|&&c| c != TWIST)
        .filter(|&&c| build_w_total_with(g, dim_cap, c).is_ok_and(|w| structural_failures(&w).is_empty()))
        .map(|c| format!("{c:?}"))
        .collect();
    Err(Error::Invariant(format!(
        "total space with twist {TWIST:?} breaks the contract ({}); conventions that pass: [{}]",
        problems.join("; "),
        passing.join(", ")
    )))
}

fn structural_failures(w: &TotalSpace) -> Vec<String> {
    let mut out: Vec<String> = w.total.validate().iter().take(3).map(|v| v.to_string()).collect();
    out.extend(w.projection.validate().iter().take(3).map(|v| format!("projection: {v}")));
    out.extend(freeness_failures(w));
    out.extend(quotient_failures(w));
    out
}

fn freeness_failures(w: &TotalSpace) -> Vec<String> {
    let mut out = Vec::new();
    let g = &w.group;
    let cap = w.total.dim_cap();
    for n in 0..=cap {
        let o = w.group_orders[n];
        for x in 0..w.total.count(n) {
            if w.act(n, x, 0) != x {
                out.push(format!("identity does not act trivially on {x} at level {n}"));
            }
            for k in 1..o {
                if w.act(n, x, k) == x {
                    out.push(format!("level {n}: element {k} fixes simplex {x}"));
                }
            }
            for k in 0..o {
                let xk = w.act(n, x, k);
                for l in 0..o {
                    if w.act(n, xk, l) != w.act(n, x, g.compose(n, k, l)) {
                        out.push(format!("level {n}: (x·{k})·{l} ≠ x·({k}{l}) at {x}"));
                    }
                }
                if n > 0 {
                    for i in 0..=n {
                        if w.total.face(n, i, xk) != w.act(n - 1, w.total.face(n, i, x), g.face(n, i, k)) {
                            out.push(format!("level {n}: d{i} is not equivariant at ({x}, {k})"));
                        }
                    }
                }
                if n < cap {
                    for i in 0..=n {
                        let lhs = w.total.degen(n, i, xk);
                        if lhs != w.act(n + 1, w.total.degen(n, i, x), g.degen(n, i, k)) {
                            out.push(format!("level {n}: s{i} is not equivariant at ({x}, {k})"));
                        }
                    }
                }
            }
            if out.len() > 8 {
                return out;
            }
        }
    }
    out
}

/// Orbits are the fibers of the projection, and the orbit space with its
/// induced structure maps is isomorphic to `W̄G`.
fn quotient_failures(w: &TotalSpace) -> Vec<String> {
    let mut out = Vec::new();
    let cap = w.total.dim_cap();
    let mut orbit_min: Vec<Vec<usize>> = Vec::new();
    for n in 0..=cap {
        let o = w.group_orders[n];
        let mins: Vec<usize> = (0..w.total.count(n)).map(|x| (0..o).map(|k| w.act(n, x, k)).min().expect("non-empty")).collect();
        let mut fiber_min: HashMap<usize, usize> = HashMap::new();
        for x in 0..w.total.count(n) {
            let y = w.projection.apply(n, x);
            let m = fiber_min.entry(y).or_insert(x);
            *m = (*m).min(x);
        }
        for x in 0..w.total.count(n) {
            if fiber_min[&w.projection.apply(n, x)] != mins[x] {
                out.push(format!("level {n}: the orbit of {x} is not its fiber"));
                return out;
            }
        }
        if fiber_min.len() != w.projection.target().count(n) {
            out.push(format!("level {n}: projection is not surjective"));
            return out;
        }
        orbit_min.push(mins);
    }
    let reps: Vec<Vec<usize>> = orbit_min
        .iter()
        .map(|mins| {
            let mut r: Vec<usize> = mins.iter().enumerate().filter(|&(x, &m)| x == m).map(|(x, _)| x).collect();
            r.sort_unstable();
            r
        })
        .collect();
    for n in 1..=cap {
        for x in 0..w.total.count(n) {
            for i in 0..=n {
                let here = orbit_min[n - 1][w.total.face(n, i, x)];
                let at_rep = orbit_min[n - 1][w.total.face(n, i, orbit_min[n][x])];
                if here != at_rep {
                    out.push(format!("level {n}: d{i} is not well defined on the orbit of {x}"));
                    return out;
                }
            }
        }
    }
    let quotient = assemble(
        &reps,
        |&x| x,
        |n, i, &x| orbit_min[n - 1][w.total.face(n, i, x)],
        |n, i, &x| orbit_min[n + 1][w.total.degen(n, i, x)],
        |&x| x.to_string(),
    );
    let quotient = match quotient {
        Ok(q) => q,
        Err(e) => {
            out.push(format!("orbit space: {e}"));
            return out;
        }
    };
    let assignment = reps.iter().enumerate().map(|(n, r)| r.iter().map(|&x| w.projection.apply(n, x)).collect()).collect();
    match SimplicialMapData::new(quotient, w.projection.target().clone(), assignment) {
        Ok(m) if m.is_isomorphism() => {}
        Ok(_) => out.push("orbit space is not isomorphic to W̄G".into()),
        Err(e) => out.push(format!("orbit space comparison: {e}")),
    }
    out
}

/// The four clauses of a principal fibration with contractible total space.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FibrationReport {
    pub free: bool,
    pub quotient_is_base: bool,
    pub kan_fibration: KanReport,
    pub components: usize,
    pub pi1_order: Option<usize>,
    pub reduced_homology_vanishes: bool,
    pub failures: Vec<String>,
}

impl FibrationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks (a) levelwise freeness, (b) `W/G ≅ W̄G`, (c) the lifting property
/// of `W → W̄G` against horns up to `horns_up_to`, and (d) `π₀ = π₁ = 1`
/// with reduced homology vanishing through `homology_through`.
pub fn check_principal_fibration(w: &TotalSpace, horns_up_to: usize, homology_through: usize) -> Result<FibrationReport> {
    let mut failures = Vec::new();
    let free = freeness_failures(w);
    failures.extend(free.iter().map(|f| format!("freeness: {f}")));
    let quotient = quotient_failures(w);
    failures.extend(quotient.iter().map(|f| format!("quotient: {f}")));
    let kan = is_kan_fibration(&w.projection, horns_up_to)?;
    if let Some(h) = &kan.first_failure {
        failures.push(format!("fibration: horn Λ{}_{} with faces {:?} has no lift", h.n, h.k, h.faces));
    }
    let components = pi0(&w.total).count();
    if components != 1 {
        failures.push(format!("contractibility: {components} components"));
    }
    let pi1_order = if components == 1 && w.total.dim_cap() >= 2 {
        let table = pi1(&w.total, 0)?;
        if table.order() != 1 {
            failures.push(format!("contractibility: π₁ has order {}", table.order()));
        }
        Some(table.order())
    } else {
        None
    };
    let groups = homology(&w.total, homology_through)?;
    let reduced_ok = groups.iter().all(|h| {
        let expected_rank = usize::from(h.k == 0);
        h.rank == expected_rank && h.torsion.is_empty()
    });
    if !reduced_ok {
        failures.push(format!("contractibility: reduced homology does not vanish through degree {homology_through}"));
    }
    Ok(FibrationReport {
        free: free.is_empty(),
        quotient_is_base: quotient.is_empty(),
        kan_fibration: kan,
        components,
        pi1_order,
        reduced_homology_vanishes: reduced_ok,
        failures,
    })
}
