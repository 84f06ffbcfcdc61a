use std::sync::Arc;

use super::complex::{ChainComplex, ChainMapRep};
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// Mapping cone `M_n = C_{n-1} ⊕ C'_n` of `f: C -> C'` with
/// `∂(c, c') = (-∂c, ∂c' + f c)`.
///
/// Relative homology `H_n(f)` is `H_n(M)`, so that
/// `H_n(C) -> H_n(C') -> H_n(f) -> H_{n-1}(C)` is exact.
#[derive(Clone, Debug)]
pub struct MappingCone {
    pub map: ChainMapRep,
    pub cone: Arc<ChainComplex>,
    /// `(c, c') ↦ (-1)^n c` on `M_n`, degree shift 1 (the sign makes it
    /// commute with the boundaries).
    pub proj: ChainMapRep,
    /// `c' ↦ (0, c')`.
    pub incl: ChainMapRep,
}

/// Block sizes `(dim C_{n-1}, dim C'_n)` of the cone in degree `n`.
fn blocks(c: &ChainComplex, c2: &ChainComplex, n: usize) -> (usize, usize) {
    let left = if n == 0 { 0 } else { c.dim(n - 1) };
    (left, c2.dim(n))
}

pub fn mapping_cone(f: &ChainMapRep) -> Result<MappingCone> {
    if f.shift() != 0 {
        return Err(Error::ShiftNonzero(f.shift()));
    }
    let c = f.source().clone();
    let c2 = f.target().clone();
    let cutoff = (c.cutoff() + 1).min(c2.cutoff());
    let dims: Vec<usize> = (0..=cutoff)
        .map(|n| {
            let (a, b) = blocks(&c, &c2, n);
            a + b
        })
        .collect();
    let mut boundaries = Vec::with_capacity(cutoff);
    for n in 1..=cutoff {
        // rows: C_{n-2} ⊕ C'_{n-1}; columns: C_{n-1} ⊕ C'_n
        let (a_out, _) = blocks(&c, &c2, n - 1);
        let d_c =
            if n >= 2 { c.boundary(n - 1)?.scale(&-super::sparse::q(1)) } else { SparseMatrix::zeros(0, c.dim(0)) };
        let f_prev = f.map(n - 1).expect("shift 0 within cutoff");
        let top = d_c.hstack(&SparseMatrix::zeros(a_out, c2.dim(n)))?;
        let bottom = f_prev.hstack(c2.boundary(n)?)?;
        boundaries.push(top.vstack(&bottom)?);
    }
    let name = format!("cone({})", f.name());
    let cone = Arc::new(ChainComplex::new(name, dims, boundaries)?);

    let (cc, cc2) = (c.clone(), c2.clone());
    let proj = ChainMapRep::from_fn("p", cone.clone(), c.clone(), 1, |n, m| {
        let (a, b) = blocks(&cc, &cc2, n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let neg = SparseMatrix::identity(a).scale(&super::sparse::q(sign));
        debug_assert_eq!(a, cc.dim(m));
        neg.hstack(&SparseMatrix::zeros(a, b))
    })?;
    let (cc, cc2) = (c.clone(), c2.clone());
    let incl = ChainMapRep::from_fn("α", c2.clone(), cone.clone(), 0, |n, _| {
        let (a, b) = blocks(&cc, &cc2, n);
        SparseMatrix::zeros(a, b).vstack(&SparseMatrix::identity(b))
    })?;
    Ok(MappingCone { map: f.clone(), cone, proj, incl })
}

/// Map of cones induced by a square `β ∘ f = g ∘ α`, acting block-diagonally:
/// `(c, c') ↦ (α c, β c')`. `alpha` and `beta` must share their shift.
pub fn cone_map(from: &MappingCone, to: &MappingCone, alpha: &ChainMapRep, beta: &ChainMapRep) -> Result<ChainMapRep> {
    if alpha.shift() != beta.shift() {
        return Err(Error::ShapeMismatch(format!(
            "cone map needs equal shifts, got {} and {}",
            alpha.shift(),
            beta.shift()
        )));
    }
    let (c, c2) = (from.map.source().clone(), from.map.target().clone());
    let (d, d2) = (to.map.source().clone(), to.map.target().clone());
    let name = format!("cone({},{})", alpha.name(), beta.name());
    ChainMapRep::from_fn(name.clone(), from.cone.clone(), to.cone.clone(), alpha.shift(), |n, t| {
        let (a, b) = blocks(&c, &c2, n);
        let (ta, tb) = blocks(&d, &d2, t);
        let left = if n >= 1 && t >= 1 {
            match alpha.map(n - 1) {
                Some(m) => m.clone(),
                None => SparseMatrix::zeros(ta, a),
            }
        } else {
            SparseMatrix::zeros(ta, a)
        };
        let right = beta
            .map(n)
            .cloned()
            .ok_or_else(|| Error::CutoffMismatch(format!("{} undefined in degree {n}", beta.name())))?;
        if left.shape() != (ta, a) || right.shape() != (tb, b) {
            return Err(Error::ShapeMismatch(format!("{name}: block shapes in degree {n}")));
        }
        Ok(left.direct_sum(&right))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linhom::homology::betti_numbers;

    fn sphere_pair() -> Arc<ChainComplex> {
        let d1 = SparseMatrix::from_i64_rows(&[&[-1, 0, -1], &[1, -1, 0], &[0, 1, 1]]);
        let d2 = SparseMatrix::from_i64_rows(&[&[1], &[1], &[-1]]);
        let d3 = SparseMatrix::zeros(1, 0);
        Arc::new(ChainComplex::new("D2", vec![3, 3, 1, 0], vec![d1, d2, d3]).unwrap())
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = sphere_pair();
        let mc = mapping_cone(&ChainMapRep::identity(c)).unwrap();
        assert!(mc.cone.verify_boundary_squares().is_ok());
        assert!(betti_numbers(&mc.cone).iter().all(|&b| b == 0));
        assert!(mc.proj.verify().is_ok());
        assert!(mc.incl.verify().is_ok());
        assert!(mc.proj.compose(&mc.incl).unwrap().is_zero());
    }

    #[test]
    fn cone_of_zero_is_shifted_sum() {
        let c = sphere_pair();
        let mc = mapping_cone(&ChainMapRep::zero(c.clone(), c.clone(), 0)).unwrap();
        let b = betti_numbers(&c);
        let bm = betti_numbers(&mc.cone);
        for n in 0..bm.len().min(b.len()) {
            let prev = if n == 0 { 0 } else { b[n - 1] };
            assert_eq!(bm[n], prev + b[n]);
        }
    }

    #[test]
    fn shifted_map_is_rejected() {
        let c = sphere_pair();
        assert!(mapping_cone(&ChainMapRep::zero(c.clone(), c, 1)).is_err());
    }
}
