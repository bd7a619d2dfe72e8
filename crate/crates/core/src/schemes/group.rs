use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiplication table of a finite group on `0..n`; `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl TryFrom<Vec<Vec<usize>>> for GroupTable {
    type Error = Error;
    fn try_from(t: Vec<Vec<usize>>) -> Result<Self> {
        GroupTable::new(t)
    }
}

impl From<GroupTable> for Vec<Vec<usize>> {
    fn from(g: GroupTable) -> Self {
        g.table
    }
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        let bad = |m: String| Err(Error::InvalidGroupTable(m));
        if n == 0 {
            return bad("empty table".into());
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has length {}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return bad(format!("entry {x} in row {a} is out of range"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("({a}·{b})·{c} != {a}·({b}·{c})"));
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
            return bad("no identity element".into());
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return bad(format!("{a} has no inverse")),
            }
        }
        Ok(GroupTable { table, identity, inverses })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `C_2 × C_2`, element `2a + b` for `(a, b)`.
    pub fn klein() -> Self {
        Self::new((0..4).map(|x: usize| (0..4).map(|y: usize| x ^ y).collect()).collect()).expect("Klein group")
    }

    /// The symmetric group on three letters, elements in lexicographic
    /// order of their one-line notation.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        // (a·b)(i) = a(b(i))
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        Self::new(table).expect("S3")
    }

    pub fn direct_product(&self, other: &GroupTable) -> Self {
        let (n, m) = (self.order(), other.order());
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect())
            .collect();
        Self::new(table).expect("product of groups")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_group() {
        let g = GroupTable::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn rejects_non_group() {
        assert!(GroupTable::new(vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(GroupTable::new(vec![vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn klein_is_product_of_c2() {
        assert_eq!(GroupTable::cyclic(2).direct_product(&GroupTable::cyclic(2)), GroupTable::klein());
    }
}
