//! Builders for the chain complexes of an algebra: Leibniz, Hochschild,
//! Connes, Chevalley–Eilenberg (trivial and adjoint coefficients), group
//! bar, and the matrix complexes `L` and `P`, plus Kähler forms.

mod bar;
mod hochschild;
pub mod kahler;
mod leibniz;
pub mod matrix;
pub mod perm;
pub mod tensor;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linhom::{ChainComplex, SparseMatrix, SparseVec};

pub use bar::BarBuilder;
pub use hochschild::{ChhBuilder, ConnesBasis, ConnesBuilder};
pub use kahler::{kahler_complex, kahler_module, KahlerModule};
pub(crate) use leibniz::{adjoint_index, adjoint_unrank, wedge_index};
pub use leibniz::{CeAdjBuilder, CeBuilder, ClBuilder};
pub use matrix::{theta_nf, LBuilder, PBuilder};
pub use perm::{face_u, factorial, symmetric_group, CyclicClass, Permutation};

/// Default cap on basis elements per degree.
pub const DEFAULT_BOUND: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_dim: DEFAULT_BOUND }
    }
}

impl Limits {
    pub fn new(max_dim: usize) -> Self {
        Self { max_dim }
    }

    pub fn check(&self, what: &str, degree: usize, dim: u128) -> Result<usize> {
        if dim > self.max_dim as u128 {
            return Err(Error::ResourceBound { what: what.to_string(), degree, dim, bound: self.max_dim });
        }
        Ok(dim as usize)
    }
}

/// A complex described one basis element at a time.
pub trait Builder: Sync {
    fn name(&self) -> String;

    /// Dimension in degree `n` (may exceed what fits in memory).
    fn dim(&self, n: usize) -> u128;

    /// `∂_n` of basis element `col`, for `n >= 1`.
    fn boundary_column(&self, n: usize, col: usize) -> SparseVec;

    fn label(&self, n: usize, idx: usize) -> String;
}

/// Builds degrees `0..=cutoff`, columns in parallel.
pub fn assemble(b: &dyn Builder, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    assemble_with(b, cutoff, limits, |_, build| Ok(build()))
}

/// As [`assemble`], routing each `∂_n` through `fetch(n, build)` so callers
/// can serve it from a cache.
pub fn assemble_with(
    b: &dyn Builder,
    cutoff: usize,
    limits: Limits,
    mut fetch: impl FnMut(usize, &dyn Fn() -> SparseMatrix) -> Result<SparseMatrix>,
) -> Result<ChainComplex> {
    let name = b.name();
    let dims = (0..=cutoff).map(|n| limits.check(&name, n, b.dim(n))).collect::<Result<Vec<_>>>()?;
    let boundaries =
        (1..=cutoff).map(|n| fetch(n, &|| boundary_matrix(b, n, dims[n - 1], dims[n]))).collect::<Result<Vec<_>>>()?;
    ChainComplex::new(name, dims, boundaries)
}

/// `∂_n` as a `rows × cols` matrix.
pub fn boundary_matrix(b: &dyn Builder, n: usize, rows: usize, cols: usize) -> SparseMatrix {
    let cols: Vec<SparseVec> = (0..cols).into_par_iter().map(|c| b.boundary_column(n, c)).collect();
    SparseMatrix::from_columns(rows, cols)
}

pub fn labels(b: &dyn Builder, n: usize, limits: Limits) -> Result<Vec<String>> {
    let d = limits.check(&b.name(), n, b.dim(n))?;
    Ok((0..d).map(|i| b.label(n, i)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplexKind {
    Cl,
    Chh,
    Clambda,
    Ce,
    CeAdj,
    Bar,
    L,
    P,
}

impl ComplexKind {
    pub const ALL: [ComplexKind; 8] = [
        ComplexKind::Cl,
        ComplexKind::Chh,
        ComplexKind::Clambda,
        ComplexKind::Ce,
        ComplexKind::CeAdj,
        ComplexKind::Bar,
        ComplexKind::L,
        ComplexKind::P,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ComplexKind::Cl => "CL",
            ComplexKind::Chh => "CHH",
            ComplexKind::Clambda => "CLAMBDA",
            ComplexKind::Ce => "CE",
            ComplexKind::CeAdj => "CE_ADJ",
            ComplexKind::Bar => "BAR",
            ComplexKind::L => "L",
            ComplexKind::P => "P",
        }
    }

    /// The homology theory the complex computes, for reports.
    pub fn homology_name(self) -> &'static str {
        match self {
            ComplexKind::Cl => "HL",
            ComplexKind::Chh => "HH",
            ComplexKind::Clambda => "HC",
            ComplexKind::Ce => "H^Lie",
            ComplexKind::CeAdj => "H^Lie(A;A)",
            ComplexKind::Bar => "H(BG)",
            ComplexKind::L => "H(L)",
            ComplexKind::P => "H(P)",
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ComplexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ComplexKind::ALL
            .into_iter()
            .find(|k| k.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown complex kind `{s}`")))
    }
}

/// The builder for `kind` over `a`, prepared for degrees up to `cutoff`.
pub fn builder(kind: ComplexKind, a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<Box<dyn Builder>> {
    Ok(match kind {
        ComplexKind::Cl => Box::new(ClBuilder::new(a.clone())),
        ComplexKind::Chh => Box::new(ChhBuilder::new(a.clone())),
        ComplexKind::Clambda => Box::new(ConnesBuilder::new(a.clone(), cutoff, limits)?),
        ComplexKind::Ce => Box::new(CeBuilder::new(a.clone())),
        ComplexKind::CeAdj => Box::new(CeAdjBuilder::new(a.clone())),
        ComplexKind::Bar => {
            let g = a.group().ok_or_else(|| Error::NotAGroupAlgebra(a.name().to_string()))?;
            Box::new(BarBuilder::new(a.name(), g.clone()))
        }
        ComplexKind::L => Box::new(LBuilder::new(a.clone(), cutoff)),
        ComplexKind::P => Box::new(PBuilder::new(a.clone(), cutoff)),
    })
}

pub fn build(kind: ComplexKind, a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    let b = builder(kind, a, cutoff, limits)?;
    assemble(b.as_ref(), cutoff, limits)
}

pub fn build_cl(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::Cl, a, cutoff, limits)
}

pub fn build_chh(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::Chh, a, cutoff, limits)
}

pub fn build_clambda(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::Clambda, a, cutoff, limits)
}

pub fn build_ce(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::Ce, a, cutoff, limits)
}

pub fn build_ce_adjoint(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::CeAdj, a, cutoff, limits)
}

pub fn build_bar(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::Bar, a, cutoff, limits)
}

pub fn build_l(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::L, a, cutoff, limits)
}

pub fn build_p(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<ChainComplex> {
    build(ComplexKind::P, a, cutoff, limits)
}

#[cfg(test)]
mod tests;
