use super::{matrix_from_columns, ComplexSet};
use crate::algebra::AlgebraMorphism;
use crate::complexes::tensor::{decode, encode, push_tensor, Slot};
use crate::complexes::{ComplexKind, ConnesBuilder};
use crate::error::{Error, Result};
use crate::linhom::{q, ChainMapRep, SparseMatrix, SparseVec};

/// `f(x_0) ⊗ .. ⊗ f(x_k)` in the tensor basis of the target (dimension `d`).
pub fn tensor_power(f: &SparseMatrix, xs: &[usize], d: usize) -> SparseVec {
    let slots: Vec<Slot<'_>> = xs.iter().map(|&x| Slot::Vec(f.column(x))).collect();
    let mut out = Vec::new();
    push_tensor(&mut out, &q(1), &slots, |ys| Some((encode(ys, d), 1)));
    SparseVec::from_terms(out)
}

fn check_ends(f: &AlgebraMorphism, src: &ComplexSet, tgt: &ComplexSet) -> Result<()> {
    if f.source().content_hash() != src.algebra().content_hash()
        || f.target().content_hash() != tgt.algebra().content_hash()
    {
        return Err(Error::InvalidParameter(format!(
            "{} does not run from `{}` to `{}`",
            f.name(),
            src.algebra().name(),
            tgt.algebra().name()
        )));
    }
    Ok(())
}

/// `f^{⊗n}: CL_n(A) -> CL_n(B)`.
pub fn cl_map(
    f: &AlgebraMorphism,
    src: &ComplexSet,
    tgt: &ComplexSet,
    cutoff: usize,
    target_cutoff: usize,
) -> Result<ChainMapRep> {
    functorial(f, src, tgt, ComplexKind::Cl, cutoff, target_cutoff, 0)
}

/// `f^{⊗(n+1)}: CHH_n(A) -> CHH_n(B)`.
pub fn chh_map(
    f: &AlgebraMorphism,
    src: &ComplexSet,
    tgt: &ComplexSet,
    cutoff: usize,
    target_cutoff: usize,
) -> Result<ChainMapRep> {
    functorial(f, src, tgt, ComplexKind::Chh, cutoff, target_cutoff, 1)
}

fn functorial(
    f: &AlgebraMorphism,
    src: &ComplexSet,
    tgt: &ComplexSet,
    kind: ComplexKind,
    cutoff: usize,
    target_cutoff: usize,
    extra: usize,
) -> Result<ChainMapRep> {
    check_ends(f, src, tgt)?;
    let s = src.get(kind, cutoff)?;
    let t = tgt.get(kind, target_cutoff)?;
    let (da, db) = (src.algebra().dim(), tgt.algebra().dim());
    let name = format!("{}({})", kind.id(), f.name());
    ChainMapRep::from_fn(name, s.clone(), t.clone(), 0, |n, m| {
        Ok(matrix_from_columns(t.dim(m), s.dim(n), |col| tensor_power(f.matrix(), &decode(col, n + extra, da), db)))
    })
}

/// The map induced on `C^λ`, through representatives.
pub fn clambda_map(
    f: &AlgebraMorphism,
    src: &ComplexSet,
    tgt: &ComplexSet,
    cutoff: usize,
    target_cutoff: usize,
) -> Result<ChainMapRep> {
    check_ends(f, src, tgt)?;
    let s = src.get(ComplexKind::Clambda, cutoff)?;
    let t = tgt.get(ComplexKind::Clambda, target_cutoff)?;
    let (da, db) = (src.algebra().dim(), tgt.algebra().dim());
    let from = ConnesBuilder::new(src.algebra().clone(), cutoff, src.limits())?.into_bases();
    let to = ConnesBuilder::new(tgt.algebra().clone(), target_cutoff, tgt.limits())?.into_bases();
    let name = format!("CLAMBDA({})", f.name());
    ChainMapRep::from_fn(name, s.clone(), t.clone(), 0, |n, m| {
        Ok(matrix_from_columns(t.dim(m), s.dim(n), |col| {
            to[m].project(&tensor_power(f.matrix(), &decode(from[n].reps[col], n + 1, da), db))
        }))
    })
}
