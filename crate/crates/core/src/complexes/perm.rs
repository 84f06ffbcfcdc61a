//! Permutations of `{0, .., n-1}`, the symmetric group in lexicographic
//! order, and the class `U_n` of `n`-cycles.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// `images[i] = σ(i)`; displayed one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidParameter(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// The cyclic shift `τ_n: i ↦ i + 1 mod n`.
    pub fn cyclic_shift(n: usize) -> Self {
        Self { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    /// Transposition of `i` and `j` in `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    /// Cycle decomposition, each cycle starting at its least point, cycles
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i64 {
        if (self.len() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// True for a single cycle through all points (the empty permutation is
    /// not cyclic).
    pub fn is_cyclic(&self) -> bool {
        !self.is_empty() && self.cycles().len() == 1
    }

    /// Orbit word `(0, σ(0), σ²(0), ..)` of a cyclic permutation.
    pub fn cycle_word(&self) -> Result<Vec<usize>> {
        if !self.is_cyclic() {
            return Err(Error::NotCyclic(self.to_string()));
        }
        let mut word = Vec::with_capacity(self.len());
        let mut x = 0;
        for _ in 0..self.len() {
            word.push(x);
            x = self.images[x];
        }
        Ok(word)
    }

    /// The cyclic permutation with orbit word `word` (a permutation of
    /// `0..n`, read cyclically).
    pub fn from_cycle_word(word: &[usize]) -> Self {
        let n = word.len();
        let mut images = vec![0; n];
        for k in 0..n {
            images[word[k]] = word[(k + 1) % n];
        }
        Self { images }
    }

    /// Rank in the lexicographic order of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0;
        let mut fact = factorial(n);
        let mut used = vec![false; n];
        for (i, &x) in self.images.iter().enumerate() {
            fact /= n - i;
            let smaller = (0..x).filter(|&y| !used[y]).count();
            rank += smaller * fact;
            used[x] = true;
        }
        rank
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, one-based, fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().map(|x| x + 1).join(" "))?;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All of `S_n` in lexicographic order of image tuples.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    (0..n).permutations(n).map(Permutation::from_images_unchecked).collect()
}

/// The conjugacy class `U_n` of `n`-cycles, in lexicographic order, with a
/// lookup from lexicographic rank in `S_n`.
#[derive(Clone, Debug)]
pub struct CyclicClass {
    n: usize,
    elements: Vec<Permutation>,
    index_of_rank: Vec<Option<usize>>,
}

impl CyclicClass {
    pub fn new(n: usize) -> Self {
        let all = symmetric_group(n);
        let mut index_of_rank = vec![None; all.len()];
        let mut elements = Vec::new();
        for (rank, p) in all.into_iter().enumerate() {
            if p.is_cyclic() {
                index_of_rank[rank] = Some(elements.len());
                elements.push(p);
            }
        }
        Self { n, elements, index_of_rank }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.len() != self.n {
            return None;
        }
        self.index_of_rank[p.lex_rank()]
    }
}

/// Face `d_i: U_{n+1} -> U_n` for `0 <= i <= n`.
///
/// On the orbit word `s = (s_0 = 0, s_1, .., s_n)`, `d_i` for `i < n` merges
/// positions `i` and `i + 1` keeping the smaller value, `d_n` drops `s_n`;
/// values are then re-ranked to `0..n`.
pub fn face_u(sigma: &Permutation, i: usize) -> Result<Permutation> {
    let word = sigma.cycle_word()?;
    let n = word.len() - 1;
    if i > n {
        return Err(Error::DegreeOutOfRange { degree: i, valid: format!("0..={n}") });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("U_1 has no faces".into()));
    }
    let mut merged: Vec<usize> = Vec::with_capacity(n);
    for (k, &x) in word.iter().enumerate() {
        if i < n && k == i + 1 {
            let last = merged.last_mut().expect("k >= 1");
            *last = (*last).min(x);
        } else if !(i == n && k == n) {
            merged.push(x);
        }
    }
    Ok(Permutation::from_cycle_word(&rerank(&merged)))
}

/// Replaces distinct values by their ranks.
pub(crate) fn rerank(values: &[usize]) -> Vec<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    values.iter().map(|v| sorted.binary_search(v).expect("present")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_and_cycles() {
        let t = Permutation::transposition(3, 0, 1);
        assert_eq!(t.sign(), -1);
        assert_eq!(t.to_string(), "(1 2)");
        let c = Permutation::cyclic_shift(3);
        assert_eq!(c.sign(), 1);
        assert_eq!(c.cycle_type(), vec![3]);
        assert_eq!(c.to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(2).to_string(), "()");
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 0..=5 {
            for (k, p) in symmetric_group(n).iter().enumerate() {
                assert_eq!(p.lex_rank(), k);
            }
        }
    }

    #[test]
    fn cyclic_class_sizes() {
        for n in 1..=6 {
            let u = CyclicClass::new(n);
            assert_eq!(u.len(), factorial(n - 1));
            assert!(u.elements().iter().all(|p| p.cycle_type() == vec![n]));
        }
    }

    #[test]
    fn faces_of_the_shift() {
        for n in 1..=5 {
            let tau = Permutation::cyclic_shift(n + 1);
            for i in 0..=n {
                assert_eq!(face_u(&tau, i).unwrap(), Permutation::cyclic_shift(n));
            }
        }
    }

    #[test]
    fn presimplicial_identities() {
        for m in 3..=5 {
            for sigma in CyclicClass::new(m).elements() {
                let n = m - 1;
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = face_u(&face_u(sigma, j).unwrap(), i).unwrap();
                        let rhs = face_u(&face_u(sigma, i).unwrap(), j - 1).unwrap();
                        assert_eq!(lhs, rhs, "σ = {sigma}, i = {i}, j = {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_cyclic_is_rejected() {
        assert!(face_u(&Permutation::identity(3), 0).is_err());
    }

    #[test]
    fn cycle_word_round_trip() {
        for sigma in CyclicClass::new(5).elements() {
            assert_eq!(&Permutation::from_cycle_word(&sigma.cycle_word().unwrap()), sigma);
        }
    }
}
