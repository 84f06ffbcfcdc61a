//! Exact elimination: echelon bases, rank, kernels, column-span solvers.
//!
//! Rank is computed fraction-free on primitive integer rows, first in `i64`
//! with overflow checks and, if anything overflows, again with big integers.
//! Kernels and solvers work on rational vectors whose leading entry is 1.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::sparse::{SparseMatrix, SparseVec, Q};

/// Leading-entry echelon basis of a subspace of `Q^n`.
///
/// Every stored vector has a distinct leading index with coefficient 1.
/// Each vector carries a tag: the combination of inserted generators it
/// represents, so reductions can report coordinates.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    vectors: Vec<SparseVec>,
    tags: Vec<SparseVec>,
    pivot_slot: HashMap<usize, usize>,
}

/// Outcome of reducing a vector against an [`EchelonBasis`].
#[derive(Clone, Debug)]
pub struct Reduction {
    /// What is left after eliminating every pivot coordinate.
    pub remainder: SparseVec,
    /// The combination of tags subtracted, so `v = remainder + Σ tag·basis`.
    pub tag: SparseVec,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_slot.contains_key(&i)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.vectors.iter().map(|v| v.leading().expect("nonzero").0)
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    /// Eliminates every pivot coordinate of `v`.
    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        self.reduce_with_tag(v, SparseVec::new())
    }

    fn reduce_with_tag(&self, v: &SparseVec, mut tag: SparseVec) -> Reduction {
        let mut v = v.clone();
        let mut k = 0;
        while k < v.nnz() {
            let (idx, c) = {
                let (i, c) = &v.entries()[k];
                (*i, c.clone())
            };
            match self.pivot_slot.get(&idx) {
                Some(&slot) => {
                    // stored vectors have leading entry 1 at `idx`; entries
                    // before position k are untouched by the subtraction
                    v = v.add_scaled(&self.vectors[slot], &-c.clone());
                    tag = tag.add_scaled(&self.tags[slot], &c);
                }
                None => k += 1,
            }
        }
        Reduction { remainder: v, tag }
    }

    /// Reduces only until the leading entry is not a pivot.
    fn reduce_leading(&self, v: &SparseVec, mut tag: SparseVec) -> (SparseVec, SparseVec) {
        let mut v = v.clone();
        while let Some((idx, c)) = v.leading() {
            let Some(&slot) = self.pivot_slot.get(&idx) else {
                break;
            };
            let c = c.clone();
            v = v.add_scaled(&self.vectors[slot], &-c.clone());
            tag = tag.add_scaled(&self.tags[slot], &c);
        }
        (v, tag)
    }

    /// Inserts `v` with tag `tag`; returns false if `v` was already in the span.
    ///
    /// The stored tag is adjusted so that `stored = Σ tag_i · generator_i`
    /// holds for the tags the caller supplies.
    pub fn insert(&mut self, v: &SparseVec, tag: SparseVec) -> bool {
        let (rem, acc) = self.reduce_leading(v, SparseVec::new());
        let Some((lead, c)) = rem.leading() else {
            return false;
        };
        let inv = c.recip();
        let stored = rem.scale(&inv);
        // rem = v - Σ acc_slot · stored_slot, so tag(rem) = tag - acc·tags
        let stored_tag = tag.sub(&acc).scale(&inv);
        self.pivot_slot.insert(lead, self.vectors.len());
        self.vectors.push(stored);
        self.tags.push(stored_tag);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).remainder.is_zero()
    }
}

/// Exact rank of the span of `vectors`.
pub fn rank_of_vectors(vectors: &[SparseVec]) -> usize {
    if let Some(r) = small::rank(vectors) {
        return r;
    }
    big::rank(vectors)
}

/// Exact rank of a matrix (via its columns or rows, whichever set is smaller
/// in ambient dimension).
pub fn rank(m: &SparseMatrix) -> usize {
    if m.rows() <= m.cols() {
        rank_of_vectors(m.columns())
    } else {
        rank_of_vectors(&m.row_vectors())
    }
}

/// Fully reduced row echelon form of the row space of `rows`.
///
/// Returns the reduced rows sorted by pivot.
pub fn rref(rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r, SparseVec::new());
    }
    let mut vecs: Vec<SparseVec> = basis.vectors.clone();
    vecs.sort_by_key(|v| v.leading().expect("nonzero").0);
    let pivots: HashMap<usize, usize> =
        vecs.iter().enumerate().map(|(k, v)| (v.leading().expect("nonzero").0, k)).collect();
    // back-substitute from the last pivot upwards
    for k in (0..vecs.len()).rev() {
        let mut v = vecs[k].clone();
        let mut pos = 1;
        while pos < v.nnz() {
            let (idx, c) = {
                let (i, c) = &v.entries()[pos];
                (*i, c.clone())
            };
            match pivots.get(&idx) {
                Some(&other) if other != k => {
                    v = v.add_scaled(&vecs[other], &-c);
                }
                _ => pos += 1,
            }
        }
        vecs[k] = v;
    }
    vecs
}

/// Basis of the kernel of `m`, one vector per free column, ordered by the
/// free column index.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let n = m.cols();
    let reduced = rref(&m.row_vectors());
    let mut is_pivot = vec![false; n];
    for r in &reduced {
        is_pivot[r.leading().expect("nonzero").0] = true;
    }
    let mut per_free: HashMap<usize, Vec<(usize, Q)>> = HashMap::new();
    for r in &reduced {
        let p = r.leading().expect("nonzero").0;
        for (f, c) in r.iter().skip(1) {
            per_free.entry(f).or_default().push((p, -c.clone()));
        }
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut terms = per_free.remove(&f).unwrap_or_default();
            terms.push((f, Q::one()));
            SparseVec::from_terms(terms)
        })
        .collect()
}

/// Solves `M x = v` against a fixed matrix `M`.
#[derive(Clone, Debug)]
pub struct ColumnSolver {
    basis: EchelonBasis,
    cols: usize,
}

impl ColumnSolver {
    pub fn new(m: &SparseMatrix) -> Self {
        let mut basis = EchelonBasis::new();
        for (j, c) in m.columns().iter().enumerate() {
            basis.insert(c, SparseVec::unit(j));
        }
        Self { basis, cols: m.cols() }
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// Coefficients `x` with `M x = v`, or `None` when `v` is outside the
    /// column span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let red = self.basis.reduce(v);
        red.remainder.is_zero().then_some(red.tag)
    }

    pub fn num_columns(&self) -> usize {
        self.cols
    }
}

/// Everything [`rank_kernel_image`] reports about a matrix.
#[derive(Clone, Debug)]
pub struct RankKernelImage {
    pub rank: usize,
    pub kernel: Vec<SparseVec>,
    /// Columns of the matrix at pivot positions.
    pub image: Vec<SparseVec>,
    pub solver: ColumnSolver,
}

pub fn rank_kernel_image(m: &SparseMatrix) -> RankKernelImage {
    let kernel = kernel_basis(m);
    let mut basis = EchelonBasis::new();
    let mut image = Vec::new();
    for c in m.columns() {
        if basis.insert(c, SparseVec::new()) {
            image.push(c.clone());
        }
    }
    let solver = ColumnSolver::new(m);
    RankKernelImage { rank: image.len(), kernel, image, solver }
}

/// Ranks of several matrices in parallel; order of results matches input.
pub fn ranks_parallel(ms: &[&SparseMatrix]) -> Vec<usize> {
    ms.par_iter().map(|m| rank(m)).collect()
}

/// Scales a rational vector to a primitive integer vector (content 1,
/// positive leading entry). Returns an empty vector for zero input.
pub(crate) fn primitive_integer(v: &SparseVec) -> Vec<(usize, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, c) in v.iter() {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<(usize, BigInt)> = v.iter().map(|(i, c)| (i, c.numer() * (&lcm / c.denom()))).collect();
    let mut g = BigInt::zero();
    for (_, x) in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in &mut ints {
            *x /= &g;
        }
    }
    if let Some((_, x)) = ints.first() {
        if x.is_negative() {
            for (_, x) in &mut ints {
                *x = -x.clone();
            }
        }
    }
    ints
}

mod small {
    //! `i64` fraction-free elimination; gives up (returns `None`) on overflow.

    use super::*;

    type Row = Vec<(usize, i64)>;

    fn gcd(a: i64, b: i64) -> i64 {
        let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as i64
    }

    fn make_primitive(r: &mut Row) {
        let mut g = 0;
        for (_, x) in r.iter() {
            g = gcd(g, *x);
            if g == 1 {
                break;
            }
        }
        if g > 1 {
            for (_, x) in r.iter_mut() {
                *x /= g;
            }
        }
        if r.first().is_some_and(|(_, x)| *x < 0) {
            for (_, x) in r.iter_mut() {
                *x = -*x;
            }
        }
    }

    /// `a*v - b*w`, with v and w both having the same leading index.
    fn combine(v: &Row, a: i64, w: &Row, b: i64) -> Option<Row> {
        let mut out = Vec::with_capacity(v.len() + w.len());
        let (mut i, mut j) = (0, 0);
        while i < v.len() || j < w.len() {
            let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
            let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
            if take_v {
                out.push((v[i].0, v[i].1.checked_mul(a)?));
                i += 1;
            } else if take_w {
                out.push((w[j].0, w[j].1.checked_mul(b)?.checked_neg()?));
                j += 1;
            } else {
                let x = v[i].1.checked_mul(a)?.checked_sub(w[j].1.checked_mul(b)?)?;
                if x != 0 {
                    out.push((v[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
        Some(out)
    }

    fn to_row(v: &SparseVec) -> Option<Row> {
        let ints = primitive_integer(v);
        ints.into_iter().map(|(i, x)| Some((i, x.to_i64()?))).collect()
    }

    pub(super) fn rank(vectors: &[SparseVec]) -> Option<usize> {
        let mut pivots: HashMap<usize, Row> = HashMap::new();
        for v in vectors {
            let mut r = to_row(v)?;
            while let Some(&(lead, x)) = r.first() {
                let Some(p) = pivots.get(&lead) else {
                    break;
                };
                let y = p[0].1;
                let g = gcd(x, y);
                r = combine(&r, y / g, p, x / g)?;
                make_primitive(&mut r);
            }
            if let Some(&(lead, _)) = r.first() {
                pivots.insert(lead, r);
            }
        }
        Some(pivots.len())
    }
}

mod big {
    //! Big-integer fraction-free elimination.

    use super::*;

    type Row = Vec<(usize, BigInt)>;

    fn make_primitive(r: &mut Row) {
        let mut g = BigInt::zero();
        for (_, x) in r.iter() {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for (_, x) in r.iter_mut() {
                *x /= &g;
            }
        }
        if r.first().is_some_and(|(_, x)| x.is_negative()) {
            for (_, x) in r.iter_mut() {
                *x = -x.clone();
            }
        }
    }

    fn combine(v: &Row, a: &BigInt, w: &Row, b: &BigInt) -> Row {
        let mut out = Vec::with_capacity(v.len() + w.len());
        let (mut i, mut j) = (0, 0);
        while i < v.len() || j < w.len() {
            let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
            let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
            if take_v {
                out.push((v[i].0, &v[i].1 * a));
                i += 1;
            } else if take_w {
                out.push((w[j].0, -(&w[j].1 * b)));
                j += 1;
            } else {
                let x = &v[i].1 * a - &w[j].1 * b;
                if !x.is_zero() {
                    out.push((v[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    pub(super) fn rank(vectors: &[SparseVec]) -> usize {
        let mut pivots: HashMap<usize, Row> = HashMap::new();
        for v in vectors {
            let mut r = primitive_integer(v);
            while let Some((lead, x)) = r.first().cloned() {
                let Some(p) = pivots.get(&lead) else {
                    break;
                };
                let y = &p[0].1;
                let g = x.gcd(y);
                r = combine(&r, &(y / &g), p, &(&x / &g));
                make_primitive(&mut r);
            }
            if let Some((lead, _)) = r.first() {
                pivots.insert(*lead, r);
            }
        }
        pivots.len()
    }

    #[cfg(test)]
    pub(super) fn rank_for_test(vectors: &[SparseVec]) -> usize {
        rank(vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linhom::sparse::q;

    fn mat(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_i64_rows(rows)
    }

    #[test]
    fn zero_matrix() {
        let m = SparseMatrix::zeros(3, 3);
        let r = rank_kernel_image(&m);
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel.len(), 3);
    }

    #[test]
    fn identity_matrix() {
        let r = rank_kernel_image(&SparseMatrix::identity(4));
        assert_eq!(r.rank, 4);
        assert!(r.kernel.is_empty());
    }

    #[test]
    fn proportional_rows() {
        let m = mat(&[&[1, 2], &[2, 4]]);
        let r = rank_kernel_image(&m);
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel.len(), 1);
        // kernel spanned by (2, -1)
        let k = &r.kernel[0];
        assert_eq!(k.get(0) * q(-1), k.get(1) * q(2));
        assert!(m.apply(k).is_zero());
    }

    #[test]
    fn solver_reports_coefficients() {
        let m = mat(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]);
        let s = ColumnSolver::new(&m);
        let v = SparseVec::from_terms(vec![(0, q(3)), (1, q(5))]);
        let x = s.solve(&v).unwrap();
        assert_eq!(m.apply(&x), v);
        assert!(s.solve(&SparseVec::unit(2)).is_none());
    }

    #[test]
    fn small_and_big_paths_agree() {
        let m = mat(&[&[3, 5, 7, 1], &[2, 4, 6, 8], &[1, 1, 1, 1], &[5, 9, 13, 9]]);
        let cols = m.columns();
        assert_eq!(small::rank(cols), Some(big::rank_for_test(cols)));
        assert_eq!(rank(&m), 3);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let m = mat(&[&[big, 1], &[big - 1, 1], &[3, big]]);
        assert_eq!(rank(&m), 2);
    }
}
