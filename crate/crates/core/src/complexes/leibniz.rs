use std::sync::Arc;

use itertools::Itertools;
use num_integer::binomial;

use super::tensor::{decode, encode, power, push_tensor, sort_with_sign, subset_rank, subset_unrank, Slot};
use super::Builder;
use crate::algebra::Algebra;
use crate::linhom::{q, SparseVec, Q};

pub(crate) fn bracket_table(a: &Algebra) -> Vec<SparseVec> {
    let d = a.dim();
    (0..d * d).map(|ij| a.bracket_basis(ij / d, ij % d)).collect()
}

/// `d(x_0 ⊗ .. ⊗ x_{m-1}) = Σ_{i<j} (-1)^{j+1} (.., [x_i, x_j], .., x̂_j, ..)`,
/// each term passed through `index`.
pub(crate) fn leibniz_terms(
    brackets: &[SparseVec],
    d: usize,
    xs: &[usize],
    out: &mut Vec<(usize, Q)>,
    mut index: impl FnMut(&[usize]) -> Option<(usize, i64)>,
) {
    let m = xs.len();
    let mut slots: Vec<Slot<'_>> = Vec::with_capacity(m.saturating_sub(1));
    for j in 1..m {
        let sign = q(if j % 2 == 1 { 1 } else { -1 });
        for i in 0..j {
            let br = &brackets[xs[i] * d + xs[j]];
            if br.is_zero() {
                continue;
            }
            slots.clear();
            for (k, &x) in xs.iter().enumerate() {
                if k == i {
                    slots.push(Slot::Vec(br));
                } else if k != j {
                    slots.push(Slot::Basis(x));
                }
            }
            push_tensor(out, &sign, &slots, &mut index);
        }
    }
}

pub(crate) fn tensor_label(a: &Algebra, xs: &[usize], sep: &str) -> String {
    if xs.is_empty() {
        return "1".into();
    }
    xs.iter().map(|&x| a.basis_names()[x].as_str()).join(sep)
}

/// `CL_n = A^{⊗n}`, `CL_0 = k`.
pub struct ClBuilder {
    a: Arc<Algebra>,
    brackets: Vec<SparseVec>,
}

impl ClBuilder {
    pub fn new(a: Arc<Algebra>) -> Self {
        let brackets = bracket_table(&a);
        Self { a, brackets }
    }
}

impl Builder for ClBuilder {
    fn name(&self) -> String {
        format!("CL({})", self.a.name())
    }

    fn dim(&self, n: usize) -> u128 {
        power(self.a.dim(), n)
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let d = self.a.dim();
        let xs = decode(col, n, d);
        let mut out = Vec::new();
        leibniz_terms(&self.brackets, d, &xs, &mut out, |ys| Some((encode(ys, d), 1)));
        SparseVec::from_terms(out)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        tensor_label(&self.a, &decode(idx, n, self.a.dim()), "⊗")
    }
}

/// `CE_n = Λ^n A`, basis the increasing `n`-subsets of the algebra basis.
pub struct CeBuilder {
    a: Arc<Algebra>,
    brackets: Vec<SparseVec>,
}

impl CeBuilder {
    pub fn new(a: Arc<Algebra>) -> Self {
        let brackets = bracket_table(&a);
        Self { a, brackets }
    }
}

/// Index and sign of the wedge of `ys` in `Λ^k`, or `None` if it vanishes.
pub(crate) fn wedge_index(ys: &[usize], d: usize) -> Option<(usize, i64)> {
    let mut sorted = ys.to_vec();
    let sign = sort_with_sign(&mut sorted)?;
    Some((subset_rank(&sorted, d), sign))
}

impl Builder for CeBuilder {
    fn name(&self) -> String {
        format!("CE({})", self.a.name())
    }

    fn dim(&self, n: usize) -> u128 {
        let d = self.a.dim();
        if n > d {
            0
        } else {
            binomial(d as u128, n as u128)
        }
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let d = self.a.dim();
        let xs = subset_unrank(col, n, d);
        let mut out = Vec::new();
        leibniz_terms(&self.brackets, d, &xs, &mut out, |ys| wedge_index(ys, d));
        SparseVec::from_terms(out)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        tensor_label(&self.a, &subset_unrank(idx, n, self.a.dim()), "∧")
    }
}

/// `A ⊗ Λ^n A`, basis `(a_0, subset)` with index `a_0 · C(d, n) + rank`.
pub struct CeAdjBuilder {
    a: Arc<Algebra>,
    brackets: Vec<SparseVec>,
}

impl CeAdjBuilder {
    pub fn new(a: Arc<Algebra>) -> Self {
        let brackets = bracket_table(&a);
        Self { a, brackets }
    }
}

pub(crate) fn adjoint_index(ys: &[usize], d: usize) -> Option<(usize, i64)> {
    let k = ys.len() - 1;
    let (r, sign) = wedge_index(&ys[1..], d)?;
    Some((ys[0] * binomial(d, k) + r, sign))
}

pub(crate) fn adjoint_unrank(idx: usize, n: usize, d: usize) -> Vec<usize> {
    let c = binomial(d, n);
    let mut xs = vec![idx / c];
    xs.extend(subset_unrank(idx % c, n, d));
    xs
}

impl Builder for CeAdjBuilder {
    fn name(&self) -> String {
        format!("CE_ADJ({})", self.a.name())
    }

    fn dim(&self, n: usize) -> u128 {
        let d = self.a.dim();
        if n > d {
            0
        } else {
            d as u128 * binomial(d as u128, n as u128)
        }
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let d = self.a.dim();
        let xs = adjoint_unrank(col, n, d);
        let mut out = Vec::new();
        leibniz_terms(&self.brackets, d, &xs, &mut out, |ys| adjoint_index(ys, d));
        SparseVec::from_terms(out)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        let d = self.a.dim();
        let xs = adjoint_unrank(idx, n, d);
        format!("{}⊗{}", self.a.basis_names()[xs[0]], tensor_label(&self.a, &xs[1..], "∧"))
    }
}
