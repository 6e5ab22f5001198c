use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::{Error, Result, SCHEMA_VERSION};

/// Largest group order the builders will produce.
pub const MAX_ORDER: usize = 512;

/// A finite group as an explicit multiplication table. The identity is
/// always element 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from its table, checking all group laws and that 0 is
    /// the identity. Inverses are derived from the table.
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("order {order} exceeds the size guard {MAX_ORDER}")));
        }
        if mul.iter().any(|row| row.len() != order || row.iter().any(|&v| v >= order)) {
            return Err(Error::InvalidGroup("table is not square over its elements".into()));
        }
        for (a, row) in mul.iter().enumerate() {
            if mul[0][a] != a || row[0] != a {
                return Err(Error::InvalidGroup(format!("element 0 is not an identity for {a}")));
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            let b = (0..order).find(|&b| mul[a][b] == 0 && mul[b][a] == 0);
            inv[a] = b.ok_or_else(|| Error::InvalidGroup(format!("{a} has no inverse")))?;
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(Self { order, mul, inv })
    }

    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 || m > MAX_ORDER {
            return Err(Error::InvalidGroup(format!("cyclic group of order {m} is out of range")));
        }
        let mul = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        Self::from_table(mul)
    }

    /// The symmetric group on `m ≤ 5` letters; elements are permutations in
    /// lexicographic order (identity first), product is composition
    /// `(ab)(x) = a(b(x))`.
    pub fn symmetric(m: usize) -> Result<Self> {
        if m == 0 || m > 5 {
            return Err(Error::InvalidGroup(format!("symmetric group on {m} letters is out of range (1..=5)")));
        }
        let perms: Vec<Vec<usize>> = (0..m).permutations(m).collect();
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let mul = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&b.iter().map(|&x| a[x]).collect())).collect())
            .collect();
        Self::from_table(mul)
    }

    /// Componentwise product; `(a, b)` is numbered `a + |G|·b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let order = g.order.checked_mul(h.order).filter(|&o| o <= MAX_ORDER);
        let order = order.ok_or_else(|| Error::InvalidGroup("product exceeds the size guard".into()))?;
        let split = |x: usize| (x % g.order, x / g.order);
        let mul = (0..order)
            .map(|x| {
                (0..order)
                    .map(|y| {
                        let ((a, b), (c, d)) = (split(x), split(y));
                        g.mul[a][c] + g.order * h.mul[b][d]
                    })
                    .collect()
            })
            .collect();
        Self::from_table(mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn is_homomorphism_to(&self, target: &FiniteGroup, f: &[usize]) -> bool {
        f.len() == self.order
            && f.iter().all(|&v| v < target.order)
            && (0..self.order).all(|a| (0..self.order).all(|b| f[self.mul[a][b]] == target.mul[f[a]][f[b]]))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GroupDoc { schema: SCHEMA_VERSION, group: self.clone() }).expect("group serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: GroupDoc = serde_json::from_str(s)?;
        if doc.schema != SCHEMA_VERSION {
            return Err(Error::Schema { expected: SCHEMA_VERSION, found: doc.schema });
        }
        let g = Self::from_table(doc.group.mul)?;
        if g.inv != doc.group.inv {
            return Err(Error::InvalidGroup("inverse table disagrees with multiplication".into()));
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupDoc {
    schema: u32,
    #[serde(flatten)]
    group: FiniteGroup,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_c2() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        assert_eq!(FiniteGroup::cyclic(2).unwrap().table(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn s3_is_nonabelian_against_permutation_oracle() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        // oracle: compose permutations directly
        let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..3).map(|x| pa[pb[x]]).collect();
                assert_eq!(perms[s3.mul(a, b)], composed);
            }
        }
    }

    #[test]
    fn product_is_componentwise() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let p = FiniteGroup::product(&c2, &c3).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.is_abelian());
        // (1,1) has order 6 in C2 × C3
        let mut x = 0;
        let mut seen = 0;
        loop {
            x = p.mul(x, 1 + 2);
            seen += 1;
            if x == 0 {
                break;
            }
        }
        assert_eq!(seen, 6);
    }

    #[test]
    fn guards() {
        assert!(FiniteGroup::symmetric(6).is_err());
        assert!(FiniteGroup::cyclic(0).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let s = s3.to_json_string();
        assert_eq!(FiniteGroup::from_json_str(&s).unwrap(), s3);
    }
}
