//! Index arithmetic for tensor and exterior powers of a basis of size `d`,
//! and expansion of tensors whose slots are vectors.

use num_integer::binomial;

use crate::linhom::{SparseVec, Q};

/// Lexicographic index of `(x_0, .., x_{k-1})` in base `d`.
pub fn encode(xs: &[usize], d: usize) -> usize {
    xs.iter().fold(0, |acc, &x| acc * d + x)
}

pub fn decode(mut idx: usize, k: usize, d: usize) -> Vec<usize> {
    let mut xs = vec![0; k];
    for slot in (0..k).rev() {
        xs[slot] = idx % d;
        idx /= d;
    }
    xs
}

/// `d^k` without overflow, as `u128`.
pub fn power(d: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(d as u128))
}

/// Rank of a strictly increasing `k`-subset of `0..d` in lexicographic order.
pub fn subset_rank(xs: &[usize], d: usize) -> usize {
    let k = xs.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &x) in xs.iter().enumerate() {
        for y in prev..x {
            // subsets with this prefix and next element y
            rank += binomial(d - y - 1, k - i - 1);
        }
        prev = x + 1;
    }
    rank
}

pub fn subset_unrank(mut rank: usize, k: usize, d: usize) -> Vec<usize> {
    let mut xs = Vec::with_capacity(k);
    let mut y = 0;
    for i in 0..k {
        loop {
            let c = binomial(d - y - 1, k - i - 1);
            if rank < c {
                break;
            }
            rank -= c;
            y += 1;
        }
        xs.push(y);
        y += 1;
    }
    xs
}

/// Sorts `xs` and returns the sign of the sorting permutation, or `None`
/// if two entries coincide.
pub fn sort_with_sign(xs: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    // insertion sort; k is small
    for i in 1..xs.len() {
        let mut j = i;
        while j > 0 && xs[j - 1] > xs[j] {
            xs.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// A tensor slot: a basis element or a general vector.
#[derive(Clone, Copy, Debug)]
pub enum Slot<'a> {
    Basis(usize),
    Vec(&'a SparseVec),
}

/// Adds `coef · (s_0 ⊗ .. ⊗ s_{k-1})` expanded in the tensor basis. `index`
/// maps a basis tuple to a target index and sign, or `None` for zero.
pub fn push_tensor(
    out: &mut Vec<(usize, Q)>,
    coef: &Q,
    slots: &[Slot<'_>],
    mut index: impl FnMut(&[usize]) -> Option<(usize, i64)>,
) {
    let mut xs = vec![0; slots.len()];
    expand(out, coef.clone(), slots, 0, &mut xs, &mut index);
}

fn expand(
    out: &mut Vec<(usize, Q)>,
    coef: Q,
    slots: &[Slot<'_>],
    k: usize,
    xs: &mut Vec<usize>,
    index: &mut impl FnMut(&[usize]) -> Option<(usize, i64)>,
) {
    if k == slots.len() {
        match index(xs) {
            Some((i, 1)) => out.push((i, coef)),
            Some((i, _)) => out.push((i, -coef)),
            None => {}
        }
        return;
    }
    match slots[k] {
        Slot::Basis(b) => {
            xs[k] = b;
            expand(out, coef, slots, k + 1, xs, index);
        }
        Slot::Vec(v) => {
            for (b, c) in v.iter() {
                xs[k] = b;
                expand(out, &coef * c, slots, k + 1, xs, index);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linhom::q;

    #[test]
    fn encode_decode() {
        for idx in 0..27 {
            assert_eq!(encode(&decode(idx, 3, 3), 3), idx);
        }
        assert_eq!(encode(&[], 4), 0);
    }

    #[test]
    fn subsets_in_order() {
        let d = 6;
        for k in 0..=d {
            let all: Vec<Vec<usize>> = itertools::Itertools::combinations(0..d, k).collect();
            for (r, s) in all.iter().enumerate() {
                assert_eq!(subset_rank(s, d), r);
                assert_eq!(&subset_unrank(r, k, d), s);
            }
        }
    }

    #[test]
    fn sorting_signs() {
        let mut xs = [2, 0, 1];
        assert_eq!(sort_with_sign(&mut xs), Some(1));
        let mut xs = [1, 0];
        assert_eq!(sort_with_sign(&mut xs), Some(-1));
        let mut xs = [1, 0, 1];
        assert_eq!(sort_with_sign(&mut xs), None);
    }

    #[test]
    fn expansion() {
        let v = SparseVec::from_terms(vec![(0, q(2)), (1, q(-1))]);
        let mut out = Vec::new();
        push_tensor(&mut out, &q(3), &[Slot::Basis(1), Slot::Vec(&v)], |xs| Some((encode(xs, 2), 1)));
        assert_eq!(out, vec![(2, q(6)), (3, q(-3))]);
    }
}
