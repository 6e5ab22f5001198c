//! Exact Smith normal form over the integers.
//!
//! Unit pivots are eliminated sparsely in checked `i64` arithmetic; if an
//! entry would overflow, the whole reduction restarts with big integers. The
//! residual block without unit entries is reduced densely with big integers.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix stored as rows of `(column, value)` entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BTreeMap::new(); rows] }
    }

    pub fn from_dense(m: &[Vec<i64>]) -> Self {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let entries = m.iter().map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, &v)| (c, v)).collect()).collect();
        Self { rows, cols, entries }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let e = self.entries[r].entry(c).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries[r].remove(&c);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r].get(&c).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, row) in self.entries.iter().enumerate() {
            for (&c, &v) in row {
                t.entries[c].insert(r, v);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BTreeMap::is_empty)
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (&k, &a) in row {
                for (&c, &b) in &other.entries[k] {
                    out.add(r, c, a * b);
                }
            }
        }
        out
    }
}

/// Rank and the invariant factors different from one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    /// Invariant factors `> 1`, each dividing the next.
    pub torsion: Vec<BigInt>,
}

trait Scalar: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `a − f·b`, or `None` on overflow.
    fn sub_mul(a: &Self, f: &Self, b: &Self) -> Option<Self>;
    fn mul(a: &Self, b: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(a: &Self, f: &Self, b: &Self) -> Option<Self> {
        f.checked_mul(*b).and_then(|p| a.checked_sub(p))
    }
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        a.checked_mul(*b)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(a: &Self, f: &Self, b: &Self) -> Option<Self> {
        Some(a - f * b)
    }
    fn mul(a: &Self, b: &Self) -> Option<Self> {
        Some(a * b)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Sparse unit-pivot elimination. Returns the number of unit pivots and the
/// residual rows, or `None` on overflow.
fn eliminate_units<T: Scalar>(m: &SparseMatrix) -> Option<(usize, Vec<BTreeMap<usize, T>>)> {
    let mut rows: Vec<BTreeMap<usize, T>> =
        m.entries.iter().map(|r| r.iter().map(|(&c, &v)| (c, T::from_i64(v))).collect()).collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut alive: BTreeSet<usize> = (0..m.rows).filter(|&r| !rows[r].is_empty()).collect();
    let mut units = 0;
    loop {
        // cheapest unit pivot: shortest row, then shortest column
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &alive {
            let len = rows[r].len();
            if best.is_some_and(|(_, _, cost)| len * len >= cost) {
                continue;
            }
            for (&c, v) in &rows[r] {
                if v.is_unit() {
                    let cost = len * col_rows[c].len();
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((r, c, cost));
                    }
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        units += 1;
        let pivot_row = std::mem::take(&mut rows[pr]);
        alive.remove(&pr);
        let p = pivot_row[&pc].clone();
        for &c in pivot_row.keys() {
            col_rows[c].remove(&pr);
        }
        let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
        for r in targets {
            // p = ±1, so the multiplier is a[r][pc] · p
            let f = T::mul(&rows[r][&pc], &p)?;
            for (&c, b) in &pivot_row {
                let cur = rows[r].get(&c).cloned().unwrap_or_else(|| T::from_i64(0));
                let next = T::sub_mul(&cur, &f, b)?;
                if next.vanishes() {
                    rows[r].remove(&c);
                    col_rows[c].remove(&r);
                } else {
                    rows[r].insert(c, next);
                    col_rows[c].insert(r);
                }
            }
            if rows[r].is_empty() {
                alive.remove(&r);
            }
        }
        // Column operations now clear the rest of the pivot row without
        // touching any other row, so the pivot row and column simply drop out.
    }
    let residual = alive.into_iter().map(|r| std::mem::take(&mut rows[r])).collect();
    Some((units, residual))
}

/// Dense Smith normal form; returns the nonzero diagonal.
#[allow(clippy::needless_range_loop)]
pub fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, v) in row.iter().enumerate().skip(t) {
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut again = false;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    again = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for i in t..rows {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    again = true;
                }
            }
            if !again {
                // the pivot must divide the whole trailing block
                let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
                match bad {
                    Some(i) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move a smaller remainder into the pivot position
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn finish<T: Scalar>(units: usize, residual: Vec<BTreeMap<usize, T>>) -> SmithForm {
    let cols: BTreeSet<usize> = residual.iter().flat_map(|r| r.keys().copied()).collect();
    let col_pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dense: Vec<Vec<BigInt>> = residual
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); cols.len()];
            for (c, v) in r {
                row[col_pos[c]] = v.to_big();
            }
            row
        })
        .collect();
    let diag = dense_diagonal(dense);
    let rank = units + diag.len();
    let mut torsion: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    torsion.sort();
    SmithForm { rank, torsion }
}

/// Rank and torsion invariant factors of an integer matrix.
pub fn smith_form(m: &SparseMatrix) -> SmithForm {
    match eliminate_units::<i64>(m) {
        Some((units, residual)) => finish(units, residual),
        None => {
            let (units, residual) = eliminate_units::<BigInt>(m).expect("big integers do not overflow");
            finish(units, residual)
        }
    }
}
