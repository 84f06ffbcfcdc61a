//! `L_n = k[S_n] ⊗ A^{⊗n}` and its summand `P_n = k[U_{n+1}] ⊗ A^{⊗(n+1)}`.
//!
//! A basis element `σ ⊗ (a_0, .., a_{n-1})` stands for the monomial
//! `E^{a_0}_{0 σ(0)} ⊗ .. ⊗ E^{a_{n-1}}_{n-1 σ(n-1)}` of `CL_n(gl(A))`. The
//! boundary applies the Leibniz differential to that monomial and reads each
//! term back through [`theta_nf`].

use std::sync::Arc;

use super::leibniz::tensor_label;
use super::perm::{face_u, factorial, symmetric_group, CyclicClass, Permutation};
use super::tensor::{decode, encode, power, push_tensor, Slot};
use super::Builder;
use crate::algebra::Algebra;
use crate::linhom::{q, SparseVec, Q};

/// Reads a monomial `E^{b_0}_{r_0 c_0} ⊗ ..` given as `(row, col, b)` triples.
///
/// Rows are relabelled `0..n` in slot order; the monomial is a permutation
/// pattern when the rows are distinct and the columns are the same set. Other
/// monomials give `None`.
pub fn theta_nf(monomial: &[(usize, usize, usize)]) -> Option<(Permutation, Vec<usize>)> {
    let rows: Vec<usize> = monomial.iter().map(|m| m.0).collect();
    let mut images = Vec::with_capacity(rows.len());
    for &(_, col, _) in monomial {
        images.push(rows.iter().position(|&r| r == col)?);
    }
    let sigma = Permutation::new(images).ok()?;
    Some((sigma, monomial.iter().map(|m| m.2).collect()))
}

/// Rank of a permutation given by its images, in lexicographic order.
fn images_rank(images: &[usize]) -> usize {
    Permutation::from_images_unchecked(images.to_vec()).lex_rank()
}

/// Transported boundary of `σ ⊗ xs`. `index` receives the new permutation
/// (as images) and the new tensor.
pub(crate) fn transport_terms(
    a: &Algebra,
    sigma: &[usize],
    xs: &[usize],
    out: &mut Vec<(usize, Q)>,
    mut index: impl FnMut(&[usize], &[usize]) -> Option<(usize, i64)>,
) {
    let n = xs.len();
    let mut slots: Vec<Slot<'_>> = Vec::with_capacity(n);
    let mut cols: Vec<usize> = Vec::with_capacity(n);
    let mut rows: Vec<usize> = Vec::with_capacity(n);
    for j in 1..n {
        let sign = if j % 2 == 1 { 1 } else { -1 };
        for i in 0..j {
            // term A: σ(i) = j, term B: σ(j) = i
            let cases =
                [(sigma[i] == j, xs[i], xs[j], i, sigma[j], sign), (sigma[j] == i, xs[j], xs[i], j, sigma[i], -sign)];
            for (hit, l, r, row, col, s) in cases {
                if !hit {
                    continue;
                }
                let prod = a.mul_basis(l, r);
                if prod.is_zero() {
                    continue;
                }
                slots.clear();
                rows.clear();
                cols.clear();
                for k in (0..n).filter(|&k| k != j) {
                    if k == i {
                        slots.push(Slot::Vec(prod));
                        rows.push(row);
                        cols.push(col);
                    } else {
                        slots.push(Slot::Basis(xs[k]));
                        rows.push(k);
                        cols.push(sigma[k]);
                    }
                }
                let images: Vec<usize> =
                    cols.iter().map(|c| rows.iter().position(|r| r == c).expect("pattern preserved")).collect();
                push_tensor(out, &q(s), &slots, |ys| index(&images, ys));
            }
        }
    }
}

/// Largest `n` for which `S_n` is enumerated.
const MAX_ORDER: usize = 10;

/// `n!`, saturating past [`MAX_ORDER`] since larger degrees are never built.
fn perm_count(n: usize) -> u128 {
    if n > MAX_ORDER {
        u128::MAX
    } else {
        factorial(n) as u128
    }
}

fn perm_tensor_label(a: &Algebra, sigma: &Permutation, xs: &[usize]) -> String {
    format!("{sigma}⊗{}", tensor_label(a, xs, "⊗"))
}

/// `L_n = k[S_n] ⊗ A^{⊗n}`, index `rank(σ) · d^n + tensor`.
pub struct LBuilder {
    a: Arc<Algebra>,
    perms: Vec<Vec<Permutation>>,
}

impl LBuilder {
    pub fn new(a: Arc<Algebra>, cutoff: usize) -> Self {
        let perms = (0..=cutoff).map(|n| if n <= MAX_ORDER { symmetric_group(n) } else { Vec::new() }).collect();
        Self { a, perms }
    }
}

impl Builder for LBuilder {
    fn name(&self) -> String {
        format!("L({})", self.a.name())
    }

    fn dim(&self, n: usize) -> u128 {
        perm_count(n).saturating_mul(power(self.a.dim(), n))
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let d = self.a.dim();
        let block = d.pow(n as u32);
        let sigma = &self.perms[n][col / block];
        let xs = decode(col % block, n, d);
        let tb = d.pow(n as u32 - 1);
        let mut out = Vec::new();
        transport_terms(&self.a, sigma.images(), &xs, &mut out, |im, ys| {
            Some((images_rank(im) * tb + encode(ys, d), 1))
        });
        SparseVec::from_terms(out)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        let d = self.a.dim();
        let block = d.pow(n as u32);
        perm_tensor_label(&self.a, &self.perms[n][idx / block], &decode(idx % block, n, d))
    }
}

/// `P_n = k[U_{n+1}] ⊗ A^{⊗(n+1)}`, index `i · d^{n+1} + tensor` with `i` the
/// position of `σ` in [`CyclicClass`].
pub struct PBuilder {
    a: Arc<Algebra>,
    classes: Vec<CyclicClass>,
}

impl PBuilder {
    pub fn new(a: Arc<Algebra>, cutoff: usize) -> Self {
        let classes = (0..=cutoff).map(|n| CyclicClass::new(if n < MAX_ORDER { n + 1 } else { 0 })).collect();
        Self { a, classes }
    }

    pub fn class(&self, n: usize) -> &CyclicClass {
        &self.classes[n]
    }

    /// Index of `σ ⊗ xs` in degree `n`.
    pub fn index(&self, n: usize, sigma: &Permutation, xs: &[usize]) -> Option<usize> {
        let i = self.classes.get(n)?.index_of(sigma)?;
        Some(i * self.a.dim().pow(n as u32 + 1) + encode(xs, self.a.dim()))
    }

    pub fn split(&self, n: usize, idx: usize) -> (&Permutation, Vec<usize>) {
        let d = self.a.dim();
        let block = d.pow(n as u32 + 1);
        (&self.classes[n].elements()[idx / block], decode(idx % block, n + 1, d))
    }

    /// `Σ (-1)^i d_i(σ) ⊗ d_i(a)` for basis element `col` of degree `n ≥ 1`.
    ///
    /// Writing `s` for the orbit word of `σ` and `c_k = a_{s_k}`, the faces act
    /// on `c` as Hochschild faces; each side carries the sign of its word.
    pub fn diagonal_boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let (sigma, xs) = self.split(n, col);
        let word = sigma.cycle_word().expect("cyclic");
        let sign = Permutation::from_images_unchecked(word.clone()).sign();
        let c: Vec<usize> = word.iter().map(|&k| xs[k]).collect();
        let d = self.a.dim();
        let mut out = Vec::new();
        let mut slots: Vec<Slot<'_>> = Vec::with_capacity(n);
        for i in 0..=n {
            let face = face_u(sigma, i).expect("cyclic");
            let fword = face.cycle_word().expect("cyclic");
            let fsign = Permutation::from_images_unchecked(fword.clone()).sign();
            let fi = self.classes[n - 1].index_of(&face).expect("in U_n");
            let prod = if i < n { self.a.mul_basis(c[i], c[i + 1]) } else { self.a.mul_basis(c[n], c[0]) };
            slots.clear();
            if i < n {
                slots.extend(c[..i].iter().map(|&x| Slot::Basis(x)));
                slots.push(Slot::Vec(prod));
                slots.extend(c[i + 2..].iter().map(|&x| Slot::Basis(x)));
            } else {
                slots.push(Slot::Vec(prod));
                slots.extend(c[1..n].iter().map(|&x| Slot::Basis(x)));
            }
            let s = if i % 2 == 0 { sign * fsign } else { -sign * fsign };
            let base = fi * d.pow(n as u32);
            let mut ys = vec![0; n];
            push_tensor(&mut out, &q(s), &slots, |cs| {
                for (k, &w) in fword.iter().enumerate() {
                    ys[w] = cs[k];
                }
                Some((base + encode(&ys, d), 1))
            });
        }
        SparseVec::from_terms(out)
    }
}

impl Builder for PBuilder {
    fn name(&self) -> String {
        format!("P({})", self.a.name())
    }

    fn dim(&self, n: usize) -> u128 {
        perm_count(n).saturating_mul(power(self.a.dim(), n + 1))
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let d = self.a.dim();
        let (sigma, xs) = self.split(n, col);
        let target = &self.classes[n - 1];
        let tb = d.pow(n as u32);
        let mut out = Vec::new();
        transport_terms(&self.a, sigma.images(), &xs, &mut out, |im, ys| {
            let i = target.index_of(&Permutation::from_images_unchecked(im.to_vec()))?;
            Some((i * tb + encode(ys, d), 1))
        });
        SparseVec::from_terms(out)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        let (sigma, xs) = self.split(n, idx);
        perm_tensor_label(&self.a, sigma, &xs)
    }
}
