use std::sync::Arc;

use super::{matrix_from_columns, signed_permutations, ComplexSet};
use crate::complexes::tensor::{decode, encode, subset_unrank};
use crate::complexes::{
    adjoint_index, adjoint_unrank, kahler_complex, wedge_index, ComplexKind, ConnesBasis, ConnesBuilder, KahlerModule,
};
use crate::error::Result;
use crate::linhom::{q, ChainComplex, ChainMapRep, SparseVec};

/// `Σ_π sgn(π) (x_0, x_{π(1)}, .., x_{π(n)})` as `(tuple, sign)` pairs.
fn antisymmetrize<'a>(xs: &'a [usize], perms: &'a [(Vec<usize>, i64)]) -> impl Iterator<Item = (Vec<usize>, i64)> + 'a {
    perms.iter().map(move |(p, s)| {
        let mut ys = Vec::with_capacity(xs.len());
        ys.push(xs[0]);
        ys.extend(p.iter().map(|&k| xs[1 + k]));
        (ys, *s)
    })
}

fn perm_table(cutoff: usize) -> Vec<Vec<(Vec<usize>, i64)>> {
    (0..=cutoff).map(signed_permutations).collect()
}

fn connes_bases(set: &ComplexSet, cutoff: usize) -> Result<Vec<ConnesBasis>> {
    Ok(ConnesBuilder::new(set.algebra().clone(), cutoff, set.limits())?.into_bases())
}

/// `φ: CL_{n+1} -> CHH_n`.
pub fn phi(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    phi_with(set, cutoff, false)
}

/// `φ`, or with `broken` set a copy whose identity term changes sign in
/// degrees `n >= 1` (for exercising failure reports).
pub fn phi_with(set: &ComplexSet, cutoff: usize, broken: bool) -> Result<ChainMapRep> {
    let src = set.get(ComplexKind::Cl, cutoff + 1)?;
    let tgt = set.get(ComplexKind::Chh, cutoff)?;
    let d = set.algebra().dim();
    let perms = perm_table(cutoff);
    let name = if broken { "φ (broken)" } else { "φ" };
    ChainMapRep::from_fn(name, src.clone(), tgt.clone(), 1, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| {
            let xs = decode(col, n, d);
            SparseVec::from_terms(
                antisymmetrize(&xs, &perms[t])
                    .enumerate()
                    .map(|(k, (ys, s))| {
                        let s = if broken && t >= 1 && k == 0 { -s } else { s };
                        (encode(&ys, d), q(s))
                    })
                    .collect(),
            )
        }))
    })
}

/// `θ: Λ^{n+1} -> C^λ_n`.
pub fn theta(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let src = set.get(ComplexKind::Ce, cutoff + 1)?;
    let tgt = set.get(ComplexKind::Clambda, cutoff)?;
    let d = set.algebra().dim();
    let perms = perm_table(cutoff);
    let bases = connes_bases(set, cutoff)?;
    ChainMapRep::from_fn("θ", src.clone(), tgt.clone(), 1, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| {
            let xs = subset_unrank(col, n, d);
            SparseVec::from_terms(
                antisymmetrize(&xs, &perms[t])
                    .filter_map(|(ys, s)| bases[t].class(encode(&ys, d)).map(|(k, c)| (k, q(s * c))))
                    .collect(),
            )
        }))
    })
}

/// `ε: A ⊗ Λ^n -> CHH_n`.
pub fn epsilon(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let src = set.get(ComplexKind::CeAdj, cutoff)?;
    let tgt = set.get(ComplexKind::Chh, cutoff)?;
    let d = set.algebra().dim();
    let perms = perm_table(cutoff);
    ChainMapRep::from_fn("ε", src.clone(), tgt.clone(), 0, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| {
            let xs = adjoint_unrank(col, n, d);
            SparseVec::from_terms(antisymmetrize(&xs, &perms[t]).map(|(ys, s)| (encode(&ys, d), q(s))).collect())
        }))
    })
}

fn signed_unit(hit: Option<(usize, i64)>) -> SparseVec {
    match hit {
        Some((i, s)) => SparseVec::from_terms(vec![(i, q(s))]),
        None => SparseVec::new(),
    }
}

/// `A^{⊗n} -> Λ^n`.
pub fn proj_lie(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let src = set.get(ComplexKind::Cl, cutoff)?;
    let tgt = set.get(ComplexKind::Ce, cutoff)?;
    let d = set.algebra().dim();
    ChainMapRep::from_fn("proj_lie", src.clone(), tgt.clone(), 0, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| signed_unit(wedge_index(&decode(col, n, d), d))))
    })
}

/// `A^{⊗(n+1)} -> A ⊗ Λ^n`.
pub fn proj_adjoint(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let src = set.get(ComplexKind::Cl, cutoff + 1)?;
    let tgt = set.get(ComplexKind::CeAdj, cutoff)?;
    let d = set.algebra().dim();
    ChainMapRep::from_fn("proj_adj", src.clone(), tgt.clone(), 1, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| signed_unit(adjoint_index(&decode(col, n, d), d))))
    })
}

/// `I: CHH_n -> C^λ_n`.
pub fn proj_i(set: &ComplexSet, cutoff: usize) -> Result<ChainMapRep> {
    let src = set.get(ComplexKind::Chh, cutoff)?;
    let tgt = set.get(ComplexKind::Clambda, cutoff)?;
    let bases = connes_bases(set, cutoff)?;
    ChainMapRep::from_fn("I", src.clone(), tgt.clone(), 0, |n, t| {
        Ok(matrix_from_columns(tgt.dim(t), src.dim(n), |col| signed_unit(bases[n].class(col))))
    })
}

/// `p: CL_{n+1} -> Ω^n` and the antisymmetrization `ε_Ω: Ω^n -> CHH_n`.
pub struct KahlerMaps {
    pub omega: Arc<ChainComplex>,
    pub modules: Vec<KahlerModule>,
    pub p: ChainMapRep,
    pub epsilon: ChainMapRep,
}

pub fn kahler_maps(set: &ComplexSet, cutoff: usize) -> Result<KahlerMaps> {
    let a = set.algebra();
    let d = a.dim();
    let (omega, modules) = kahler_complex(a, cutoff, set.limits())?;
    let omega = Arc::new(omega);
    let cl = set.get(ComplexKind::Cl, cutoff + 1)?;
    let chh = set.get(ComplexKind::Chh, cutoff)?;
    let p = ChainMapRep::from_fn("p", cl.clone(), omega.clone(), 1, |n, t| {
        let m = &modules[t];
        Ok(matrix_from_columns(m.dim(), cl.dim(n), |col| m.project(&signed_unit(adjoint_index(&decode(col, n, d), d)))))
    })?;
    let perms = perm_table(cutoff);
    let epsilon = ChainMapRep::from_fn("ε_Ω", omega.clone(), chh.clone(), 0, |n, t| {
        let m = &modules[n];
        Ok(matrix_from_columns(chh.dim(t), m.dim(), |col| {
            let xs = adjoint_unrank(m.basis()[col], n, d);
            SparseVec::from_terms(antisymmetrize(&xs, &perms[t]).map(|(ys, s)| (encode(&ys, d), q(s))).collect())
        }))
    })?;
    Ok(KahlerMaps { omega, modules, p, epsilon })
}
