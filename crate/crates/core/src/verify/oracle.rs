use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linhom::{q, ChainComplex, SparseMatrix};

/// Small periodic complex computing `HH_*(k[x]/(x^m))`: `A` in every degree,
/// `∂` zero from odd degrees and multiplication by `m x^{m-1}` from even
/// degrees `≥ 2`. Expects the basis `1, x, .., x^{m-1}`.
pub fn truncated_poly_oracle(a: &Algebra, cutoff: usize) -> Result<ChainComplex> {
    let m = a.dim();
    if m < 2 || !is_truncated_poly(a) {
        return Err(Error::InvalidParameter(format!("`{}` is not k[x]/(x^m) with m ≥ 2", a.name())));
    }
    let mut top = crate::linhom::SparseVec::unit(0);
    for _ in 0..m - 1 {
        top = a.mul_vec(&top, &crate::linhom::SparseVec::unit(1));
    }
    let norm = top.scale(&q(m as i64));
    let mult =
        SparseMatrix::from_columns(m, (0..m).map(|j| a.mul_vec(&norm, &crate::linhom::SparseVec::unit(j))).collect());
    let boundaries = (1..=cutoff).map(|n| if n % 2 == 0 { mult.clone() } else { SparseMatrix::zeros(m, m) }).collect();
    ChainComplex::new(format!("periodic({})", a.name()), vec![m; cutoff + 1], boundaries)
}

/// `e_0 = 1` and `e_i e_j = e_{i+j}` (zero past the top).
pub(crate) fn is_truncated_poly(a: &Algebra) -> bool {
    let m = a.dim();
    *a.unit() == crate::linhom::SparseVec::unit(0)
        && (0..m).all(|i| {
            (0..m).all(|j| {
                let p = a.mul_basis(i, j);
                if i + j < m {
                    *p == crate::linhom::SparseVec::unit(i + j)
                } else {
                    p.is_zero()
                }
            })
        })
}
