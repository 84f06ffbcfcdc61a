use super::{matrix_from_columns, ComplexSet};
use crate::algebra::FiniteGroup;
use crate::complexes::tensor::{decode, encode};
use crate::complexes::ComplexKind;
use crate::error::{Error, Result};
use crate::linhom::{ChainMapRep, SparseVec};

fn group_of(set: &ComplexSet) -> Result<&FiniteGroup> {
    set.algebra().group().ok_or_else(|| Error::NotAGroupAlgebra(set.algebra().name().to_string()))
}

/// `π: CHH_n(k[G]) -> B_n(G)`, `(g_0, .., g_n) ↦ (g_1, .., g_n)`.
pub fn bar_pi(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let o = group_of(set)?.order();
    let src = set.get(ComplexKind::Chh, cutoff)?;
    let tgt = set.get(ComplexKind::Bar, cutoff)?;
    ChainMapRep::from_fn("π", src.clone(), tgt.clone(), 0, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| SparseVec::unit(encode(&decode(col, n + 1, o)[1..], o))))
    })
}

/// `ι: B_n(G) -> CHH_n(k[G])`, `(g_1, .., g_n) ↦ ((g_1 ⋯ g_n)^{-1}, g_1, .., g_n)`.
pub fn bar_iota(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let g = group_of(set)?;
    let o = g.order();
    let src = set.get(ComplexKind::Bar, cutoff)?;
    let tgt = set.get(ComplexKind::Chh, cutoff)?;
    ChainMapRep::from_fn("ι", src.clone(), tgt.clone(), 0, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| {
            let xs = decode(col, n, o);
            let mut ys = vec![g.inverse(g.product(&xs))];
            ys.extend(xs);
            SparseVec::unit(encode(&ys, o))
        }))
    })
}
