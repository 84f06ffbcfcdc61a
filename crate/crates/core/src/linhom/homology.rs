use rayon::prelude::*;

use super::complex::{ChainComplex, ChainMapRep};
use super::echelon::{kernel_basis, rank, EchelonBasis};
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// Homology of a complex in one degree.
///
/// The solver is an echelon basis of `B_n + span(reps)` whose tags record,
/// for each stored vector, its class in homology coordinates (boundaries
/// carry the zero class).
#[derive(Clone, Debug)]
pub struct HomologyData {
    pub degree: usize,
    pub betti: usize,
    pub cycle_dim: usize,
    pub boundary_rank: usize,
    pub representatives: Vec<SparseVec>,
    solver: EchelonBasis,
}

impl HomologyData {
    /// Homology coordinates of a cycle, or `None` if `v` is not a cycle.
    pub fn class_of(&self, v: &SparseVec) -> Option<SparseVec> {
        let red = self.solver.reduce(v);
        red.remainder.is_zero().then_some(red.tag)
    }

    /// True if `v` is a boundary.
    pub fn is_boundary(&self, v: &SparseVec) -> bool {
        self.class_of(v).is_some_and(|c| c.is_zero())
    }
}

fn check_degree(c: &ChainComplex, n: usize) -> Result<()> {
    if n + 1 > c.cutoff() {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            valid: format!("0..={} (cutoff {})", c.cutoff().saturating_sub(1), c.cutoff()),
        });
    }
    Ok(())
}

/// Homology in degree `n`; needs `n + 1 <= cutoff`.
///
/// Representatives are the earliest kernel basis vectors (in free-column
/// order) that are independent modulo boundaries.
pub fn homology(c: &ChainComplex, n: usize) -> Result<HomologyData> {
    check_degree(c, n)?;
    let d_out = c.boundary(n)?;
    let d_in = c.boundary(n + 1)?;
    let kernel = kernel_basis(d_out);
    let mut solver = EchelonBasis::new();
    for col in d_in.columns() {
        solver.insert(col, SparseVec::new());
    }
    let boundary_rank = solver.rank();
    let mut representatives = Vec::new();
    for z in &kernel {
        let tag = SparseVec::unit(representatives.len());
        if solver.insert(z, tag) {
            representatives.push(z.clone());
        }
    }
    Ok(HomologyData {
        degree: n,
        betti: representatives.len(),
        cycle_dim: kernel.len(),
        boundary_rank,
        representatives,
        solver,
    })
}

/// Betti numbers in degrees `0..cutoff` (the top degree is left out: its
/// incoming boundary is unknown).
pub fn betti_numbers(c: &ChainComplex) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=c.cutoff()).into_par_iter().map(|n| rank(c.boundary(n).expect("in range"))).collect();
    (0..c.cutoff()).map(|n| c.dim(n) - ranks[n] - ranks[n + 1]).collect()
}

/// Matrix of `F_*: H_n(C) -> H_{n-s}(D)` in representative bases.
pub fn induced_map(f: &ChainMapRep, n: usize) -> Result<SparseMatrix> {
    let t = f.target_degree(n).ok_or_else(|| Error::DegreeOutOfRange {
        degree: n,
        valid: format!("source degrees of {} with a target", f.name()),
    })?;
    let src = homology(f.source(), n)?;
    let tgt = homology(f.target(), t)?;
    induced_map_with(f, &src, &tgt)
}

/// As [`induced_map`], with both homologies supplied.
pub fn induced_map_with(f: &ChainMapRep, src: &HomologyData, tgt: &HomologyData) -> Result<SparseMatrix> {
    let n = src.degree;
    let m = f
        .map(n)
        .ok_or_else(|| Error::DegreeOutOfRange { degree: n, valid: format!("defined degrees of {}", f.name()) })?;
    let cols = src
        .representatives
        .iter()
        .enumerate()
        .map(|(l, z)| tgt.class_of(&m.apply(z)).ok_or(Error::NotACycle { degree: n, index: l }))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix::from_columns(tgt.betti, cols))
}

/// Rank of `F_*: H_n(C) -> H_{n-s}(D)` without computing representatives:
///
/// `rank [[∂_n, 0], [F_n, ∂'_{t+1}]] - rank ∂_n - rank ∂'_{t+1}`.
pub fn induced_image_rank(f: &ChainMapRep, n: usize) -> Result<usize> {
    let t = f.target_degree(n).ok_or_else(|| Error::DegreeOutOfRange {
        degree: n,
        valid: format!("source degrees of {} with a target", f.name()),
    })?;
    check_degree(f.target(), t)?;
    let d_src = f.source().boundary(n)?;
    let d_tgt = f.target().boundary(t + 1)?;
    let f_n = f.map(n).expect("target degree exists");
    let top = d_src.hstack(&SparseMatrix::zeros(d_src.rows(), d_tgt.cols()))?;
    let bottom = f_n.hstack(d_tgt)?;
    let block = top.vstack(&bottom)?;
    let ranks: Vec<usize> = [&block, d_src, d_tgt].par_iter().map(|m| rank(m)).collect();
    Ok(ranks[0] - ranks[1] - ranks[2])
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use proptest::prelude::*;

    use super::*;
    use crate::linhom::sparse::q;

    /// Boundary of a triangle plus one filled edge: C_0 = Q^3, C_1 = Q^3.
    fn circle() -> ChainComplex {
        // edges 01, 12, 02
        let d1 = SparseMatrix::from_i64_rows(&[&[-1, 0, -1], &[1, -1, 0], &[0, 1, 1]]);
        let d2 = SparseMatrix::zeros(3, 0);
        ChainComplex::new("S1", vec![3, 3, 0], vec![d1, d2]).unwrap()
    }

    #[test]
    fn circle_homology() {
        let c = circle();
        assert_eq!(betti_numbers(&c), vec![1, 1]);
        let h1 = homology(&c, 1).unwrap();
        assert_eq!(h1.betti, 1);
        let z = &h1.representatives[0];
        assert!(c.boundary(1).unwrap().apply(z).is_zero());
    }

    #[test]
    fn top_degree_is_rejected() {
        assert!(homology(&circle(), 2).is_err());
    }

    #[test]
    fn identity_induces_identity() {
        let c = Arc::new(circle());
        let id = ChainMapRep::identity(c);
        for n in 0..2 {
            let m = induced_map(&id, n).unwrap();
            let b = m.rows();
            assert_eq!(m, SparseMatrix::identity(b));
            assert_eq!(induced_image_rank(&id, n).unwrap(), b);
        }
    }

    #[test]
    fn zero_induces_zero() {
        let c = Arc::new(circle());
        let z = ChainMapRep::zero(c.clone(), c, 0);
        assert!(induced_map(&z, 1).unwrap().is_zero());
        assert_eq!(induced_image_rank(&z, 0).unwrap(), 0);
    }

    fn two_skeleton() -> ChainComplex {
        // filled triangle: one 2-cell with boundary 12 - 02 + 01
        let d1 = SparseMatrix::from_i64_rows(&[&[-1, 0, -1], &[1, -1, 0], &[0, 1, 1]]);
        let d2 = SparseMatrix::from_i64_rows(&[&[1], &[1], &[-1]]);
        let d3 = SparseMatrix::zeros(1, 0);
        ChainComplex::new("D2", vec![3, 3, 1, 0], vec![d1, d2, d3]).unwrap()
    }

    proptest! {
        #[test]
        fn solver_classes_are_consistent(coeffs in proptest::collection::vec(-3i64..=3, 3)) {
            let c = two_skeleton();
            let h = homology(&c, 0).unwrap();
            let v = SparseVec::from_terms(coeffs.iter().enumerate().map(|(i, &x)| (i, q(x))).collect());
            let class = h.class_of(&v).unwrap();
            let mut rest = v.clone();
            for (l, c_l) in class.iter() {
                rest = rest.add_scaled(&h.representatives[l], &-c_l.clone());
            }
            prop_assert!(h.is_boundary(&rest));
        }
    }
}
