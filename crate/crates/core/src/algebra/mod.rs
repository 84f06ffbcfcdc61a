//! Finite-dimensional unital associative algebras over the rationals, given
//! by structure constants.

mod catalogue;
mod group;
pub mod io;
mod morphism;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linhom::{format_rational, SparseVec, Q};

pub use catalogue::{
    builtin_algebra, builtin_from_spec, builtin_morphism, catalogue, group_algebra, group_algebra_from_cayley,
    matrix_algebra, matrix_algebra_bounded, morphism_catalogue, parse_builtin, BuiltinInfo, DEFAULT_MATRIX_BOUND,
};
pub use group::{cyclic_group, symmetric_group_s3, FiniteGroup};
pub use morphism::{validate_morphism, AlgebraMorphism, MorphismReport, Nilpotency};

/// Index data of a matrix algebra `M_N(A)`: basis element `(i, j, b)` is
/// `E^{e_b}_{ij}`, stored at `(i * N + j) * dim A + b`.
#[derive(Clone, Debug)]
pub struct MatrixMeta {
    pub size: usize,
    pub base: Arc<Algebra>,
}

impl MatrixMeta {
    pub fn index(&self, i: usize, j: usize, b: usize) -> usize {
        (i * self.size + j) * self.base.dim() + b
    }

    pub fn split(&self, idx: usize) -> (usize, usize, usize) {
        let d = self.base.dim();
        let b = idx % d;
        let ij = idx / d;
        (ij / self.size, ij % self.size, b)
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    name: String,
    basis: Vec<String>,
    unit: SparseVec,
    /// `table[i * dim + j]` is `e_i e_j`.
    table: Vec<SparseVec>,
    group: Option<FiniteGroup>,
    matrix: Option<MatrixMeta>,
}

/// An element together with the dimension of its ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    pub dim: usize,
    pub coords: SparseVec,
}

impl AlgebraElement {
    pub fn new(dim: usize, coords: SparseVec) -> Result<Self> {
        if let Some(i) = coords.max_index() {
            if i >= dim {
                return Err(Error::DimensionMismatch { expected: dim, actual: i + 1 });
            }
        }
        Ok(Self { dim, coords })
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index out of range");
        Self { dim, coords: SparseVec::unit(i) }
    }

    pub fn zero(dim: usize) -> Self {
        Self { dim, coords: SparseVec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

impl Algebra {
    /// Builds an algebra from its table without validating it; see
    /// [`validate_algebra`].
    pub fn from_table(
        name: impl Into<String>,
        basis: Vec<String>,
        unit: SparseVec,
        table: Vec<SparseVec>,
    ) -> Result<Self> {
        let d = basis.len();
        if d == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if table.len() != d * d {
            return Err(Error::DimensionMismatch { expected: d * d, actual: table.len() });
        }
        for v in table.iter().chain(std::iter::once(&unit)) {
            if v.max_index().is_some_and(|i| i >= d) {
                return Err(Error::InvalidAlgebra(format!("coordinate index beyond dimension {d}")));
            }
        }
        Ok(Self { name: name.into(), basis, unit, table, group: None, matrix: None })
    }

    pub(crate) fn with_group(mut self, g: FiniteGroup) -> Self {
        self.group = Some(g);
        self
    }

    pub(crate) fn with_matrix(mut self, meta: MatrixMeta) -> Self {
        self.matrix = Some(meta);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// The basis group, for group algebras.
    pub fn group(&self) -> Option<&FiniteGroup> {
        self.group.as_ref()
    }

    pub fn matrix_meta(&self) -> Option<&MatrixMeta> {
        self.matrix.as_ref()
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        self.mul_basis(i, j).sub(self.mul_basis(j, i))
    }

    /// Product of coordinate vectors.
    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (k, c) in self.mul_basis(i, j).iter() {
                    terms.push((k, &ab * c));
                }
            }
        }
        SparseVec::from_terms(terms)
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn element(&self, coords: SparseVec) -> Result<AlgebraElement> {
        AlgebraElement::new(self.dim(), coords)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement { dim: self.dim(), coords: self.unit.clone() }
    }

    /// Content hash of the structure constants (name excluded).
    pub fn content_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("dim {}\n", self.dim()));
        for (i, c) in self.unit.iter() {
            h.update(format!("u {i} {}\n", format_rational(c)));
        }
        for (ij, v) in self.table.iter().enumerate() {
            for (k, c) in v.iter() {
                h.update(format!("t {ij} {k} {}\n", format_rational(c)));
            }
        }
        hex::encode(&h.finalize()[..8])
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.dim != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: x.dim });
        }
        Ok(())
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.name, self.dim())
    }
}

pub fn multiply(a: &Algebra, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    a.check(x)?;
    a.check(y)?;
    Ok(AlgebraElement { dim: a.dim(), coords: a.mul_vec(&x.coords, &y.coords) })
}

/// `xy - yx`.
pub fn bracket(a: &Algebra, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    let xy = multiply(a, x, y)?;
    let yx = multiply(a, y, x)?;
    Ok(AlgebraElement { dim: a.dim(), coords: xy.coords.sub(&yx.coords) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub dim: usize,
    /// Triples `(i, j, k)` with `(e_i e_j) e_k != e_i (e_j e_k)`.
    pub associativity_failures: Vec<(usize, usize, usize)>,
    /// Basis indices where the unit fails on either side.
    pub unit_failures: Vec<usize>,
    pub passed: bool,
}

/// Checks associativity on all basis triples and the unit on all basis
/// elements.
pub fn validate_algebra(a: &Algebra) -> ValidationReport {
    let d = a.dim();
    let mut associativity_failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let ij = a.mul_basis(i, j);
            for k in 0..d {
                let left = a.mul_vec(ij, &SparseVec::unit(k));
                let right = a.mul_vec(&SparseVec::unit(i), a.mul_basis(j, k));
                if left != right {
                    associativity_failures.push((i, j, k));
                }
            }
        }
    }
    let unit_failures: Vec<usize> = (0..d)
        .filter(|&i| {
            let e = SparseVec::unit(i);
            a.mul_vec(&a.unit, &e) != e || a.mul_vec(&e, &a.unit) != e
        })
        .collect();
    let passed = associativity_failures.is_empty() && unit_failures.is_empty();
    ValidationReport { algebra: a.name.clone(), dim: d, associativity_failures, unit_failures, passed }
}

/// Coordinates with small integer entries, handy in tests and examples.
pub fn coords(values: &[i64]) -> SparseVec {
    SparseVec::from_dense(&values.iter().map(|&v| Q::from_integer(v.into())).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::linhom::q;

    #[test]
    fn dual_numbers() {
        let a = builtin_algebra("dual", &[]).unwrap();
        let eps = AlgebraElement::basis(2, 1);
        assert!(multiply(&a, &eps, &eps).unwrap().is_zero());
        assert_eq!(a.basis_names(), ["1", "ε"]);
    }

    #[test]
    fn split_product_is_componentwise() {
        let a = builtin_algebra("split", &[2]).unwrap();
        let x = a.element(coords(&[1, 0])).unwrap();
        let y = a.element(coords(&[0, 1])).unwrap();
        assert!(multiply(&a, &x, &y).unwrap().is_zero());
    }

    #[test]
    fn matrix_units() {
        let m2 = matrix_algebra(&Arc::new(builtin_algebra("rationals", &[]).unwrap()), 2).unwrap();
        let meta = m2.matrix_meta().unwrap().clone();
        let e = |i, j| AlgebraElement::basis(4, meta.index(i, j, 0));
        assert_eq!(multiply(&m2, &e(0, 0), &e(0, 1)).unwrap(), e(0, 1));
        let br = bracket(&m2, &e(0, 1), &e(1, 0)).unwrap();
        assert_eq!(br.coords, e(0, 0).coords.sub(&e(1, 1).coords));
        assert_eq!(bracket(&m2, &e(0, 0), &e(0, 1)).unwrap(), e(0, 1));
    }

    #[test]
    fn commutative_bracket_vanishes() {
        let a = builtin_algebra("truncated_poly", &[3]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!(a.bracket_basis(i, j).is_zero());
            }
        }
    }

    #[test]
    fn perturbed_group_table_is_caught() {
        let a = builtin_algebra("cyclic", &[3]).unwrap();
        let mut table: Vec<SparseVec> = (0..9).map(|ij| a.mul_basis(ij / 3, ij % 3).clone()).collect();
        table[0] = table[0].add(&SparseVec::unit(0));
        let broken = Algebra::from_table("broken", a.basis_names().to_vec(), a.unit().clone(), table).unwrap();
        let r = validate_algebra(&broken);
        assert!(!r.passed);
        assert!(!r.associativity_failures.is_empty() || !r.unit_failures.is_empty());
    }

    #[test]
    fn dimension_mismatch() {
        let a = builtin_algebra("dual", &[]).unwrap();
        let x = AlgebraElement::basis(3, 2);
        assert!(multiply(&a, &x, &x).is_err());
    }

    #[test]
    fn every_builtin_validates() {
        for info in catalogue() {
            let a = builtin_algebra(info.name, info.default_params).unwrap();
            assert!(validate_algebra(&a).passed, "{}", a.name());
        }
        let m3 = matrix_algebra(&Arc::new(builtin_algebra("rationals", &[]).unwrap()), 3).unwrap();
        assert!(validate_algebra(&m3).passed);
    }

    #[test]
    fn elementary_bracket_formula() {
        let base = Arc::new(builtin_algebra("dual", &[]).unwrap());
        for n in 1..=3 {
            let m = matrix_algebra(&base, n).unwrap();
            let meta = m.matrix_meta().unwrap().clone();
            for x in 0..m.dim() {
                for y in 0..m.dim() {
                    let (i, j, a) = meta.split(x);
                    let (k, l, b) = meta.split(y);
                    let mut expected = SparseVec::new();
                    if j == k {
                        for (c, v) in base.mul_basis(a, b).iter() {
                            expected = expected.add_scaled(&SparseVec::unit(meta.index(i, l, c)), v);
                        }
                    }
                    if l == i {
                        for (c, v) in base.mul_basis(b, a).iter() {
                            expected = expected.add_scaled(&SparseVec::unit(meta.index(k, j, c)), &-v.clone());
                        }
                    }
                    assert_eq!(m.bracket_basis(x, y), expected);
                }
            }
        }
    }

    fn arb_coords(d: usize) -> impl Strategy<Value = SparseVec> {
        proptest::collection::vec(-3i64..=3, d).prop_map(|v| coords(&v))
    }

    proptest! {
        #[test]
        fn bracket_is_alternating(x in arb_coords(6), y in arb_coords(6)) {
            let a = builtin_algebra("s3", &[]).unwrap();
            let (x, y) = (a.element(x).unwrap(), a.element(y).unwrap());
            prop_assert!(bracket(&a, &x, &x).unwrap().is_zero());
            let xy = bracket(&a, &x, &y).unwrap();
            let yx = bracket(&a, &y, &x).unwrap();
            prop_assert_eq!(xy.coords, yx.coords.scale(&q(-1)));
        }

        #[test]
        fn associative_on_random_elements(x in arb_coords(6), y in arb_coords(6), z in arb_coords(6)) {
            let a = builtin_algebra("s3", &[]).unwrap();
            let left = a.mul_vec(&a.mul_vec(&x, &y), &z);
            let right = a.mul_vec(&x, &a.mul_vec(&y, &z));
            prop_assert_eq!(left, right);
        }
    }
}
