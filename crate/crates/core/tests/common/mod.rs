//! Oracles shared by the integration tests. Nothing here calls into the
//! library's homology code.

#![allow(dead_code)]

/// Invariant factors of a small dense integer matrix, by repeated gcd
/// pivoting. Returns `(rank, factors > 1)`.
#[allow(clippy::needless_range_loop)]
pub fn dense_invariants(mut a: Vec<Vec<i128>>) -> (usize, Vec<i128>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut changed = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    changed = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                }
                if a[t][j] != 0 {
                    changed = true;
                }
            }
            if !changed {
                // the pivot must divide the whole remaining block
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row t / column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
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
    let rank = diag.len();
    (rank, diag.into_iter().filter(|&d| d > 1).collect())
}

/// `(rank, torsion)` of `H_k` for `k ≤ through`, from boundary matrices
/// `d[k] : C_k → C_{k−1}` written as `dims[k−1]` rows by `dims[k]` columns.
pub fn homology_from_boundaries(dims: &[usize], d: &[Vec<Vec<i128>>], through: usize) -> Vec<(usize, Vec<u64>)> {
    let ranks: Vec<(usize, Vec<i128>)> =
        (0..dims.len()).map(|k| if k == 0 { (0, Vec::new()) } else { dense_invariants(d[k].clone()) }).collect();
    (0..=through)
        .map(|k| {
            let free = dims[k] - ranks[k].0 - ranks[k + 1].0;
            (free, ranks[k + 1].1.iter().map(|&t| t as u64).collect())
        })
        .collect()
}

/// Integral homology of a finite group from the normalized bar complex,
/// with multiplication given as a closure on `0..order` and identity `e`.
pub fn bar_homology(order: usize, e: usize, mul: impl Fn(usize, usize) -> usize, through: usize) -> Vec<(usize, Vec<u64>)> {
    let nonid: Vec<usize> = (0..order).filter(|&g| g != e).collect();
    let cells = |n: usize| -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out.iter().flat_map(|p| nonid.iter().map(move |&g| [p.clone(), vec![g]].concat())).collect();
        }
        out
    };
    let top = through + 1;
    let basis: Vec<Vec<Vec<usize>>> = (0..=top).map(cells).collect();
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let mut d = vec![Vec::new()];
    for n in 1..=top {
        let index: std::collections::HashMap<&Vec<usize>, usize> = basis[n - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut m = vec![vec![0i128; dims[n]]; dims[n - 1]];
        for (col, cell) in basis[n].iter().enumerate() {
            let mut add = |face: Vec<usize>, sign: i128| {
                if face.iter().all(|&g| g != e) {
                    m[index[&face]][col] += sign;
                }
            };
            add(cell[1..].to_vec(), 1);
            for i in 1..n {
                let mut f = cell[..i - 1].to_vec();
                f.push(mul(cell[i - 1], cell[i]));
                f.extend_from_slice(&cell[i + 1..]);
                add(f, if i % 2 == 0 { 1 } else { -1 });
            }
            add(cell[..n - 1].to_vec(), if n % 2 == 0 { 1 } else { -1 });
        }
        d.push(m);
    }
    homology_from_boundaries(&dims, &d, through)
}

/// Composition of permutations of `{0, 1, 2}` listed in lexicographic
/// order, `(p ∘ q)(x) = p(q(x))`, independent of the library's tables.
pub fn s3_oracle() -> (Vec<[usize; 3]>, impl Fn(usize, usize) -> usize) {
    let mut perms = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    perms.push([a, b, c]);
                }
            }
        }
    }
    let table = perms.clone();
    let mul = move |p: usize, q: usize| {
        let (p, q) = (table[p], table[q]);
        let r = [p[q[0]], p[q[1]], p[q[2]]];
        table.iter().position(|&t| t == r).expect("closed")
    };
    (perms, mul)
}
