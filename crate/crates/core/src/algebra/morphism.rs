use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::catalogue::matrix_algebra;
use super::Algebra;
use crate::error::{Error, Result};
use crate::linhom::{kernel_basis, rank, EchelonBasis, SparseMatrix, SparseVec};

/// A linear map `A -> B` on basis coordinates, meant to be an algebra map.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: SparseMatrix,
}

impl AlgebraMorphism {
    /// `matrix` is `dim B × dim A`; multiplicativity is not checked here.
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: SparseMatrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix is {:?}, expected {:?}",
                matrix.shape(),
                (target.dim(), source.dim())
            )));
        }
        Ok(Self { source, target, matrix })
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let m = SparseMatrix::identity(a.dim());
        Self { source: a.clone(), target: a, matrix: m }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        self.matrix.apply(x)
    }

    pub fn name(&self) -> String {
        format!("{}→{}", self.source.name(), self.target.name())
    }

    /// Entrywise `gl_N(f): M_N(A) -> M_N(B)`.
    pub fn matrix_lift(&self, n: usize) -> Result<AlgebraMorphism> {
        let ma = Arc::new(matrix_algebra(&self.source, n)?);
        let mb = Arc::new(matrix_algebra(&self.target, n)?);
        let (meta_a, meta_b) = (ma.matrix_meta().expect("matrix"), mb.matrix_meta().expect("matrix"));
        let cols = (0..ma.dim())
            .map(|x| {
                let (i, j, a) = meta_a.split(x);
                let terms = self.matrix.column(a).iter().map(|(b, v)| (meta_b.index(i, j, b), v.clone())).collect();
                SparseVec::from_terms(terms)
            })
            .collect();
        let m = SparseMatrix::from_columns(mb.dim(), cols);
        AlgebraMorphism::new(ma, mb, m)
    }
}

impl fmt::Display for AlgebraMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Nilpotency {
    /// Least `m` with `K^m = 0` (0 for the zero kernel).
    Degree(usize),
    NotNilpotent,
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Degree(m) => write!(f, "{m}"),
            Nilpotency::NotNilpotent => write!(f, "not nilpotent"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub morphism: String,
    /// Basis pairs `(i, j)` with `f(e_i e_j) != f(e_i) f(e_j)`.
    pub multiplicative_failures: Vec<(usize, usize)>,
    pub unital: bool,
    pub rank: usize,
    pub surjective: bool,
    pub kernel_dim: usize,
    pub nilpotency: Nilpotency,
    pub passed: bool,
}

pub fn validate_morphism(f: &AlgebraMorphism) -> MorphismReport {
    let (a, b) = (&f.source, &f.target);
    let mut multiplicative_failures = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = f.apply(a.mul_basis(i, j));
            let rhs = b.mul_vec(f.matrix.column(i), f.matrix.column(j));
            if lhs != rhs {
                multiplicative_failures.push((i, j));
            }
        }
    }
    let unital = &f.apply(a.unit()) == b.unit();
    let r = rank(&f.matrix);
    let kernel = kernel_basis(&f.matrix);
    let nilpotency = kernel_nilpotency(a, &kernel);
    MorphismReport {
        morphism: f.name(),
        passed: multiplicative_failures.is_empty() && unital,
        multiplicative_failures,
        unital,
        rank: r,
        surjective: r == b.dim(),
        kernel_dim: kernel.len(),
        nilpotency,
    }
}

fn span_basis(vectors: impl IntoIterator<Item = SparseVec>) -> Vec<SparseVec> {
    let mut e = EchelonBasis::new();
    for v in vectors {
        e.insert(&v, SparseVec::new());
    }
    e.vectors().to_vec()
}

/// Least `m` with `K^m = 0`, where `K^m = K · K^{m-1}`, trying up to `dim A`
/// powers.
fn kernel_nilpotency(a: &Algebra, kernel: &[SparseVec]) -> Nilpotency {
    if kernel.is_empty() {
        return Nilpotency::Degree(0);
    }
    let mut power = span_basis(kernel.iter().cloned());
    for m in 2..=a.dim() + 1 {
        let prev_dim = power.len();
        power = span_basis(kernel.iter().flat_map(|k| power.iter().map(move |p| (k, p))).map(|(k, p)| a.mul_vec(k, p)));
        if power.is_empty() {
            return Nilpotency::Degree(m);
        }
        if power.len() == prev_dim {
            // K·J = J with J ≠ 0: the powers never reach zero
            break;
        }
    }
    Nilpotency::NotNilpotent
}
