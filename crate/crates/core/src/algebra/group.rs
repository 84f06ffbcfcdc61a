use crate::error::{Error, Result};

/// A finite group given by its Cayley table `mul[g][h] = gh`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_cayley(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if names.len() != n {
            return Err(Error::NotAGroup(format!("{} names for {} rows", names.len(), n)));
        }
        for (g, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {g} has length {}, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("closure: entry {x} in row {g} is out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[g])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { names, mul, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g][h]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    /// Product `g_1 g_2 ... g_k` (identity for an empty word).
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &g| self.mul(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn conjugacy_classes(&self) -> usize {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut count = 0;
        for g in 0..n {
            if seen[g] {
                continue;
            }
            count += 1;
            for h in 0..n {
                seen[self.mul(self.mul(h, g), self.inverse(h))] = true;
            }
        }
        count
    }
}

/// `C_n = {g^0, ..., g^{n-1}}`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group order must be positive".into()));
    }
    let names = (0..n).map(|k| format!("g^{k}")).collect();
    let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_cayley(names, mul)
}

/// `S_3` as permutations of `{0,1,2}` in lexicographic order of image tuples.
pub fn symmetric_group_s3() -> FiniteGroup {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed");
    // (gh)(x) = g(h(x))
    let mul = perms.iter().map(|g| perms.iter().map(|h| index([g[h[0]], g[h[1]], g[h[2]]])).collect()).collect();
    let names = perms.iter().map(|p| format!("[{}{}{}]", p[0], p[1], p[2])).collect();
    FiniteGroup::from_cayley(names, mul).expect("S_3 is a group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_has_three_classes() {
        let g = symmetric_group_s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.conjugacy_classes(), 3);
    }

    #[test]
    fn missing_identity_is_rejected() {
        // constant table: associative but no identity
        let err = FiniteGroup::from_cayley(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]).unwrap_err();
        assert!(err.to_string().contains("identity"));
    }

    #[test]
    fn non_associative_is_rejected() {
        let mul = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 1]];
        let names = vec!["e".into(), "a".into(), "b".into()];
        assert!(FiniteGroup::from_cayley(names, mul).is_err());
    }

    #[test]
    fn cyclic_inverses() {
        let g = cyclic_group(5).unwrap();
        for x in 0..5 {
            assert_eq!(g.mul(x, g.inverse(x)), g.identity());
        }
    }
}
