//! Sparse exact-rational vectors and column-major sparse matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as reduced `p/q` (denominator always printed).
pub fn format_rational(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, Q::one())] }
    }

    /// Builds a vector from unordered terms, summing repeated indices.
    pub fn from_terms(mut terms: Vec<(usize, Q)>) -> Self {
        terms.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Q)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        Self { entries }
    }

    pub fn from_dense(values: &[Q]) -> Self {
        Self { entries: values.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect() }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &Q)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// Returns `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Q) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &Q::one())
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.add_scaled(other, &-Q::one())
    }

    /// Shifts every index by `offset` (used for direct sums).
    pub fn shifted(&self, offset: usize) -> Self {
        Self { entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect() }
    }

    /// Keeps indices in `lo..hi`, re-based to start at zero.
    pub fn window(&self, lo: usize, hi: usize) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, c)| (i - lo, c.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient so it becomes 1.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub(crate) fn push_unchecked(&mut self, i: usize, c: Q) {
        debug_assert!(self.entries.last().is_none_or(|(j, _)| *j < i));
        if !c.is_zero() {
            self.entries.push((i, c));
        }
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (i, c)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}:{c}")?;
        }
        write!(f, "]")
    }
}

/// Column-major sparse rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { rows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    /// Builds a matrix from columns; panics if an entry is out of range.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        for c in &cols {
            if let Some(m) = c.max_index() {
                assert!(m < rows, "row index {m} out of range for {rows} rows");
            }
        }
        Self { rows, cols }
    }

    pub fn from_triplets(rows: usize, cols: usize, triplets: Vec<(usize, usize, Q)>) -> Result<Self> {
        let mut per_col: Vec<Vec<(usize, Q)>> = vec![Vec::new(); cols];
        for (r, c, x) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::ShapeMismatch(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
            per_col[c].push((r, x));
        }
        Ok(Self { rows, cols: per_col.into_iter().map(SparseVec::from_terms).collect() })
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| {
                let column: Vec<Q> = rows.iter().map(|r| r[j].clone()).collect();
                SparseVec::from_dense(&column)
            })
            .collect();
        Self { rows: nrows, cols }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols.len())
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.cols[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    /// First column index holding a nonzero entry.
    pub fn first_nonzero_column(&self) -> Option<usize> {
        self.cols.iter().position(|c| !c.is_zero())
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (j, c) in v.iter() {
            for (i, x) in self.cols[j].iter() {
                terms.push((i, x * c));
            }
        }
        SparseVec::from_terms(terms)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows,
                self.cols(),
                rhs.rows,
                rhs.cols()
            )));
        }
        let cols = rhs.cols.par_iter().map(|c| self.apply(c)).collect();
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    pub fn add(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        self.combine(rhs, &Q::one())
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        self.combine(rhs, &-Q::one())
    }

    fn combine(&self, rhs: &SparseMatrix, c: &Q) -> Result<SparseMatrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch(format!("{:?} vs {:?}", self.shape(), rhs.shape())));
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&rhs.cols).map(|(a, b)| a.add_scaled(b, c)).collect(),
        })
    }

    pub fn scale(&self, c: &Q) -> SparseMatrix {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut per_row: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col.iter() {
                per_row[i].push((j, x.clone()));
            }
        }
        SparseMatrix { rows: self.cols(), cols: per_row.into_iter().map(|entries| SparseVec { entries }).collect() }
    }

    /// Row vectors, as sparse vectors over column indices.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        self.transpose().cols
    }

    /// All nonzero entries as `(row, col, value)`, sorted by `(row, col)`.
    pub fn triplets(&self) -> Vec<(usize, usize, Q)> {
        let mut out: Vec<(usize, usize, Q)> =
            self.cols.iter().enumerate().flat_map(|(j, col)| col.iter().map(move |(i, x)| (i, j, x.clone()))).collect();
        out.sort_by_key(|(i, j, _)| (*i, *j));
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col.iter() {
                out[i][j] = x.clone();
            }
        }
        out
    }

    /// Block diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.shifted(self.rows)));
        SparseMatrix { rows: self.rows + other.rows, cols }
    }

    /// Stacks `self` on top of `below` (same number of columns).
    pub fn vstack(&self, below: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != below.cols() {
            return Err(Error::ShapeMismatch(format!("vstack of {} and {} columns", self.cols(), below.cols())));
        }
        Ok(SparseMatrix {
            rows: self.rows + below.rows,
            cols: self
                .cols
                .iter()
                .zip(&below.cols)
                .map(|(a, b)| {
                    let mut v = a.clone();
                    for (i, x) in b.iter() {
                        v.push_unchecked(i + self.rows, x.clone());
                    }
                    v
                })
                .collect(),
        })
    }

    /// Places `self` beside `right` (same number of rows).
    pub fn hstack(&self, right: &SparseMatrix) -> Result<SparseMatrix> {
        if self.rows != right.rows {
            return Err(Error::ShapeMismatch(format!("hstack of {} and {} rows", self.rows, right.rows)));
        }
        let mut cols = self.cols.clone();
        cols.extend(right.cols.iter().cloned());
        Ok(SparseMatrix { rows: self.rows, cols })
    }
}
