//! Kähler forms `Ω^n` of a commutative algebra as rational vector spaces.
//!
//! `Ω^n` is `A ⊗ Λ^n A` modulo `a ⊗ (bc ∧ ω) - ab ⊗ (c ∧ ω) - ac ⊗ (b ∧ ω)`;
//! `a_0 ⊗ (a_1 ∧ .. ∧ a_n)` stands for `a_0 da_1 ∧ .. ∧ da_n`.

use std::sync::Arc;

use num_integer::binomial;

use super::leibniz::{adjoint_index, adjoint_unrank, tensor_label};
use super::tensor::{push_tensor, subset_unrank, Slot};
use super::Limits;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linhom::{q, ChainComplex, EchelonBasis, SparseMatrix, SparseVec};

#[derive(Clone, Debug)]
pub struct KahlerModule {
    degree: usize,
    algebra_dim: usize,
    relations: EchelonBasis,
    /// Ambient indices of the quotient basis (the non-pivot coordinates).
    basis: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl KahlerModule {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of `A ⊗ Λ^n A`.
    pub fn ambient_dim(&self) -> usize {
        self.position.len()
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    /// Class of a vector of `A ⊗ Λ^n A` in quotient coordinates.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let rem = self.relations.reduce(v).remainder;
        SparseVec::from_terms(rem.iter().map(|(i, c)| (self.position[i].expect("reduced"), c.clone())).collect())
    }

    /// The element of `A ⊗ Λ^n A` indexed by `(a_0, subset)`.
    pub fn ambient_index(&self, a0: usize, wedge: &[usize]) -> Option<(usize, i64)> {
        let mut ys = vec![a0];
        ys.extend_from_slice(wedge);
        adjoint_index(&ys, self.algebra_dim)
    }

    pub fn labels(&self, a: &Algebra) -> Vec<String> {
        self.basis
            .iter()
            .map(|&i| {
                let xs = adjoint_unrank(i, self.degree, self.algebra_dim);
                let forms: Vec<String> = xs[1..].iter().map(|&x| format!("d{}", a.basis_names()[x])).collect();
                if forms.is_empty() {
                    tensor_label(a, &xs[..1], "")
                } else {
                    format!("{}·{}", a.basis_names()[xs[0]], forms.join("∧"))
                }
            })
            .collect()
    }
}

pub fn kahler_module(a: &Algebra, n: usize) -> Result<KahlerModule> {
    if !a.is_commutative() {
        return Err(Error::NotCommutative(a.name().to_string()));
    }
    let d = a.dim();
    let ambient = if n > d { 0 } else { d * binomial(d, n) };
    let mut relations = EchelonBasis::new();
    if n >= 1 && ambient > 0 {
        let omegas = binomial(d, n - 1);
        for w in 0..omegas {
            let omega = subset_unrank(w, n - 1, d);
            for x in 0..d {
                for b in 0..d {
                    for c in b..d {
                        let mut out = Vec::new();
                        let bc = a.mul_basis(b, c);
                        let xb = a.mul_basis(x, b);
                        let xc = a.mul_basis(x, c);
                        let mut index = |ys: &[usize]| adjoint_index(ys, d);
                        let rest = omega.iter().map(|&o| Slot::Basis(o));
                        let mut slots = vec![Slot::Basis(x), Slot::Vec(bc)];
                        slots.extend(rest.clone());
                        push_tensor(&mut out, &q(1), &slots, &mut index);
                        let mut slots = vec![Slot::Vec(xb), Slot::Basis(c)];
                        slots.extend(rest.clone());
                        push_tensor(&mut out, &q(-1), &slots, &mut index);
                        let mut slots = vec![Slot::Vec(xc), Slot::Basis(b)];
                        slots.extend(rest);
                        push_tensor(&mut out, &q(-1), &slots, &mut index);
                        let v = SparseVec::from_terms(out);
                        if !v.is_zero() {
                            relations.insert(&v, SparseVec::new());
                        }
                    }
                }
            }
        }
    }
    let mut position = vec![None; ambient];
    let mut basis = Vec::new();
    for (i, p) in position.iter_mut().enumerate() {
        if !relations.is_pivot(i) {
            *p = Some(basis.len());
            basis.push(i);
        }
    }
    Ok(KahlerModule { degree: n, algebra_dim: d, relations, basis, position })
}

/// `Ω^*` with zero differential, degrees `0..=cutoff`.
pub fn kahler_complex(a: &Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<(ChainComplex, Vec<KahlerModule>)> {
    let name = format!("Ω({})", a.name());
    let modules = (0..=cutoff)
        .map(|n| {
            let d = a.dim() as u128;
            limits.check(&name, n, d * if n as u128 > d { 0 } else { binomial(d, n as u128) })?;
            kahler_module(a, n)
        })
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<usize> = modules.iter().map(KahlerModule::dim).collect();
    let boundaries = (1..=cutoff).map(|n| SparseMatrix::zeros(dims[n - 1], dims[n])).collect();
    Ok((ChainComplex::new(name, dims, boundaries)?, modules))
}
