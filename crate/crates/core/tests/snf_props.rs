//! Smith normal form against determinantal divisors.

use hcnerve::invariants::{smith_form, SparseMatrix};
use num_bigint::BigInt;
use proptest::prelude::*;

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    (k - 1..n).flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| {
        s.push(last);
        s
    })).collect()
}

/// `D_k` = gcd of all `k × k` minors, for `k = 1..`.
fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (m.len(), m[0].len());
    (1..=r.min(c))
        .map(|k| {
            let mut g = 0;
            for rows in subsets(r, k) {
                for cols in subsets(c, k) {
                    let minor: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect()).collect();
                    g = gcd(g, det(&minor));
                }
            }
            g
        })
        .collect()
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #[test]
    fn invariant_factors_are_divisor_ratios(m in matrix()) {
        let snf = smith_form(&SparseMatrix::from_dense(&m));
        let divisors = determinantal_divisors(&m);
        let rank = divisors.iter().take_while(|&&d| d != 0).count();
        prop_assert_eq!(snf.rank, rank);
        let mut factors = Vec::new();
        let mut prev = 1i128;
        for &d in &divisors[..rank] {
            factors.push(d / prev);
            prev = d;
        }
        let expected: Vec<BigInt> = factors.into_iter().filter(|&f| f > 1).map(BigInt::from).collect();
        prop_assert_eq!(snf.torsion.clone(), expected);
        for w in snf.torsion.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], BigInt::from(0));
        }
    }

    #[test]
    fn transpose_has_the_same_form(m in matrix()) {
        let a = SparseMatrix::from_dense(&m);
        prop_assert_eq!(smith_form(&a), smith_form(&a.transpose()));
    }
}

#[test]
fn large_entries_fall_back_to_big_integers() {
    let big = i64::MAX / 2;
    let m = vec![vec![big, 3], vec![big - 1, 5]];
    let snf = smith_form(&SparseMatrix::from_dense(&m));
    assert_eq!(snf.rank, 2);
    let det = BigInt::from(big) * 5 - BigInt::from(big - 1) * 3;
    let product: BigInt = snf.torsion.iter().product();
    assert_eq!(product, num_traits::Signed::abs(&det));
}
