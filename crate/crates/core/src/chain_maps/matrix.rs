use std::sync::Arc;

use super::{matrix_from_columns, signed_permutations, ComplexSet};
use crate::algebra::{Algebra, MatrixMeta};
use crate::complexes::tensor::{decode, encode, power};
use crate::complexes::{theta_nf, ComplexKind, PBuilder, Permutation};
use crate::error::{Error, Result};
use crate::linhom::{q, ChainMapRep, SparseMatrix, SparseVec};

fn meta_over(gl: &ComplexSet, base: &ComplexSet) -> Result<MatrixMeta> {
    let meta = gl
        .algebra()
        .matrix_meta()
        .ok_or_else(|| Error::InvalidParameter(format!("`{}` is not a matrix algebra", gl.algebra().name())))?;
    if meta.base.content_hash() != base.algebra().content_hash() {
        return Err(Error::InvalidParameter(format!(
            "`{}` is not a matrix algebra over `{}`",
            gl.algebra().name(),
            base.algebra().name()
        )));
    }
    Ok(meta.clone())
}

/// Entries of a cyclically closing path `E_{i_0 i_1} ⊗ E_{i_1 i_2} ⊗ ..`, or
/// `None`.
fn trace_tuple(meta: &MatrixMeta, xs: &[usize]) -> Option<Vec<usize>> {
    let parts: Vec<(usize, usize, usize)> = xs.iter().map(|&x| meta.split(x)).collect();
    let k = parts.len();
    (0..k).all(|l| parts[l].1 == parts[(l + 1) % k].0).then(|| parts.iter().map(|p| p.2).collect())
}

/// `tr: CHH_n(M_N(A)) -> CHH_n(A)`.
pub fn trace(gl: &ComplexSet, base: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let meta = meta_over(gl, base)?;
    let src = gl.get(ComplexKind::Chh, cutoff)?;
    let tgt = base.get(ComplexKind::Chh, cutoff)?;
    let (big, d) = (gl.algebra().dim(), base.algebra().dim());
    ChainMapRep::from_fn("tr", src.clone(), tgt.clone(), 0, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| match trace_tuple(&meta, &decode(col, n + 1, big)) {
            Some(bs) => SparseVec::unit(encode(&bs, d)),
            None => SparseVec::new(),
        }))
    })
}

/// `CHH_n(A) -> CHH_n(M_N(A))`, every factor placed at `(1, 1)`.
pub fn corner(base: &ComplexSet, gl: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let meta = meta_over(gl, base)?;
    let src = base.get(ComplexKind::Chh, cutoff)?;
    let tgt = gl.get(ComplexKind::Chh, cutoff)?;
    let (big, d) = (gl.algebra().dim(), base.algebra().dim());
    ChainMapRep::from_fn("corner", src.clone(), tgt.clone(), 0, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| {
            let xs: Vec<usize> = decode(col, n + 1, d).into_iter().map(|b| meta.index(0, 0, b)).collect();
            SparseVec::unit(encode(&xs, big))
        }))
    })
}

/// `tr ∘ φ` applied to one tuple of `CL_{t+1}(M_N(A))`.
fn trace_phi_terms(meta: &MatrixMeta, xs: &[usize], perms: &[(Vec<usize>, i64)], d: usize) -> SparseVec {
    let mut ys = Vec::with_capacity(xs.len());
    SparseVec::from_terms(
        perms
            .iter()
            .filter_map(|(p, s)| {
                ys.clear();
                ys.push(xs[0]);
                ys.extend(p.iter().map(|&k| xs[1 + k]));
                trace_tuple(meta, &ys).map(|bs| (encode(&bs, d), q(*s)))
            })
            .collect(),
    )
}

/// `tr ∘ φ: CL_{n+1}(gl_N(A)) -> CHH_n(A)`, without building `CHH(gl_N(A))`.
pub fn trace_phi(gl: &ComplexSet, base: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    trace_phi_between(gl, base, cutoff + 1, cutoff)
}

/// `tr ∘ φ` from `CL(gl_N(A))` truncated at `source_cutoff` to `CHH(A)`
/// truncated at `target_cutoff`.
pub fn trace_phi_between(
    gl: &ComplexSet,
    base: &ComplexSet,
    source_cutoff: usize,
    target_cutoff: usize,
) -> Result<ChainMapRep> {
    let meta = meta_over(gl, base)?;
    let src = gl.get(ComplexKind::Cl, source_cutoff)?;
    let tgt = base.get(ComplexKind::Chh, target_cutoff)?;
    let (big, d) = (gl.algebra().dim(), base.algebra().dim());
    let perms: Vec<_> = (0..=target_cutoff).map(signed_permutations).collect();
    ChainMapRep::from_fn("tr∘φ", src.clone(), tgt.clone(), 1, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| {
            trace_phi_terms(&meta, &decode(col, n, big), &perms[t], d)
        }))
    })
}

fn lift_tuple(meta: &MatrixMeta, sigma: &Permutation, xs: &[usize]) -> Vec<usize> {
    xs.iter().enumerate().map(|(k, &b)| meta.index(k, sigma.apply(k), b)).collect()
}

fn lift_setup(a: &Arc<Algebra>, size: usize, n: usize) -> Result<(MatrixMeta, PBuilder, usize)> {
    if size < n + 1 {
        return Err(Error::MatrixSizeTooSmall { size, needed: n + 1 });
    }
    let p = PBuilder::new(a.clone(), n);
    let cols = crate::complexes::factorial(n) * a.dim().pow(n as u32 + 1);
    Ok((MatrixMeta { size, base: a.clone() }, p, cols))
}

/// `lift_P: P_n(A) -> CL_{n+1}(gl_N(A))`, `σ ⊗ a ↦ E^{a_0}_{0 σ(0)} ⊗ ..`.
///
/// A plain linear map in one degree; it does not commute with boundaries.
pub fn lift_p(a: &Arc<Algebra>, size: usize, n: usize) -> Result<SparseMatrix> {
    let (meta, p, cols) = lift_setup(a, size, n)?;
    let big = size * size * a.dim();
    let rows = power(big, n + 1);
    let rows = usize::try_from(rows).map_err(|_| Error::ResourceBound {
        what: format!("CL(gl_{size}({}))", a.name()),
        degree: n + 1,
        dim: rows,
        bound: usize::MAX,
    })?;
    Ok(matrix_from_columns(rows, cols, |col| {
        let (sigma, xs) = p.split(n, col);
        SparseVec::unit(encode(&lift_tuple(&meta, sigma, &xs), big))
    }))
}

/// `tr ∘ φ ∘ lift_P: P_n(A) -> CHH_n(A)`.
pub fn trace_phi_lift_p(a: &Arc<Algebra>, size: usize, n: usize) -> Result<SparseMatrix> {
    let (meta, p, cols) = lift_setup(a, size, n)?;
    let d = a.dim();
    let perms = signed_permutations(n);
    Ok(matrix_from_columns(d.pow(n as u32 + 1), cols, |col| {
        let (sigma, xs) = p.split(n, col);
        trace_phi_terms(&meta, &lift_tuple(&meta, sigma, &xs), &perms, d)
    }))
}

/// `Θ_NF ∘ lift_P: P_n(A) -> L_{n+1}(A)`.
pub fn theta_nf_lift_p(a: &Arc<Algebra>, size: usize, n: usize) -> Result<SparseMatrix> {
    let (meta, p, cols) = lift_setup(a, size, n)?;
    let d = a.dim();
    let rows = crate::complexes::factorial(n + 1) * d.pow(n as u32 + 1);
    Ok(matrix_from_columns(rows, cols, |col| {
        let (sigma, xs) = p.split(n, col);
        theta_nf_column(&meta, &lift_tuple(&meta, sigma, &xs), d)
    }))
}

fn theta_nf_column(meta: &MatrixMeta, xs: &[usize], d: usize) -> SparseVec {
    let triples: Vec<(usize, usize, usize)> = xs.iter().map(|&x| meta.split(x)).collect();
    match theta_nf(&triples) {
        Some((sigma, bs)) => SparseVec::unit(sigma.lex_rank() * d.pow(bs.len() as u32) + encode(&bs, d)),
        None => SparseVec::new(),
    }
}

/// `Θ_NF: CL_n(gl_N(A)) -> L_n(A)` in one degree; non-pattern monomials go
/// to zero, so this is not a chain map.
pub fn theta_nf_matrix(gl: &Algebra, n: usize) -> Result<SparseMatrix> {
    let meta =
        gl.matrix_meta().ok_or_else(|| Error::InvalidParameter(format!("`{}` is not a matrix algebra", gl.name())))?;
    let (big, d) = (gl.dim(), meta.base.dim());
    let cols = usize::try_from(power(big, n)).map_err(|_| Error::InvalidParameter("degree too large".into()))?;
    let rows = crate::complexes::factorial(n) * d.pow(n as u32);
    Ok(matrix_from_columns(rows, cols, |col| theta_nf_column(meta, &decode(col, n, big), d)))
}

/// `CHH_n(A) -> P_n(A)`, `a ↦ τ_{n+1} ⊗ a`.
pub fn embed_cy(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let src = set.get(ComplexKind::Chh, cutoff)?;
    let tgt = set.get(ComplexKind::P, cutoff)?;
    let d = set.algebra().dim();
    let p = PBuilder::new(set.algebra().clone(), cutoff);
    ChainMapRep::from_fn("embed_cy", src.clone(), tgt.clone(), 0, |n, t| {
        let tau = Permutation::cyclic_shift(n + 1);
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| {
            SparseVec::unit(p.index(n, &tau, &decode(col, n + 1, d)).expect("τ is cyclic"))
        }))
    })
}
