use std::sync::Arc;

use super::leibniz::tensor_label;
use super::tensor::{decode, encode, power, push_tensor, Slot};
use super::{Builder, Limits};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::linhom::{q, SparseVec, Q};

/// `b(x_0, .., x_n) = Σ (-1)^i d_i`, `d_n` wrapping `x_n x_0` to the front.
pub(crate) fn hochschild_terms(
    a: &Algebra,
    xs: &[usize],
    out: &mut Vec<(usize, Q)>,
    mut index: impl FnMut(&[usize]) -> Option<(usize, i64)>,
) {
    let n = xs.len() - 1;
    let mut slots: Vec<Slot<'_>> = Vec::with_capacity(n);
    for i in 0..n {
        let prod = a.mul_basis(xs[i], xs[i + 1]);
        if prod.is_zero() {
            continue;
        }
        slots.clear();
        slots.extend(xs[..i].iter().map(|&x| Slot::Basis(x)));
        slots.push(Slot::Vec(prod));
        slots.extend(xs[i + 2..].iter().map(|&x| Slot::Basis(x)));
        push_tensor(out, &q(if i % 2 == 0 { 1 } else { -1 }), &slots, &mut index);
    }
    if n >= 1 {
        let prod = a.mul_basis(xs[n], xs[0]);
        if !prod.is_zero() {
            slots.clear();
            slots.push(Slot::Vec(prod));
            slots.extend(xs[1..n].iter().map(|&x| Slot::Basis(x)));
            push_tensor(out, &q(if n.is_multiple_of(2) { 1 } else { -1 }), &slots, &mut index);
        }
    }
}

/// `CHH_n = A^{⊗(n+1)}`.
pub struct ChhBuilder {
    a: Arc<Algebra>,
}

impl ChhBuilder {
    pub fn new(a: Arc<Algebra>) -> Self {
        Self { a }
    }
}

impl Builder for ChhBuilder {
    fn name(&self) -> String {
        format!("CHH({})", self.a.name())
    }

    fn dim(&self, n: usize) -> u128 {
        power(self.a.dim(), n + 1)
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let d = self.a.dim();
        let xs = decode(col, n + 1, d);
        let mut out = Vec::new();
        hochschild_terms(&self.a, &xs, &mut out, |ys| Some((encode(ys, d), 1)));
        SparseVec::from_terms(out)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        format!("({})", tensor_label(&self.a, &decode(idx, n + 1, self.a.dim()), ","))
    }
}

/// Basis of `A^{⊗(n+1)} / (1 - t)` in one degree.
///
/// With `rot(x_0, .., x_n) = (x_n, x_0, .., x_{n-1})` the quotient identifies
/// `rot^k(r)` with `(-1)^{nk} r`. Orbits where `n · |orbit|` is odd vanish;
/// every other orbit gives one basis element, represented by its
/// lexicographically least tuple.
#[derive(Clone, Debug)]
pub struct ConnesBasis {
    pub degree: usize,
    /// Tuple index of each class representative, increasing.
    pub reps: Vec<usize>,
    /// For each tuple index: its class and sign, or `None` if it is zero.
    class_of: Vec<Option<(u32, i8)>>,
}

impl ConnesBasis {
    pub fn new(d: usize, n: usize) -> Self {
        let len = d.pow(n as u32 + 1);
        let mut class_of = vec![None; len];
        let mut visited = vec![false; len];
        let mut reps = Vec::new();
        for start in 0..len {
            if visited[start] {
                continue;
            }
            let mut orbit = vec![start];
            let mut xs = decode(start, n + 1, d);
            loop {
                xs.rotate_right(1);
                let idx = encode(&xs, d);
                if idx == start {
                    break;
                }
                orbit.push(idx);
            }
            for &o in &orbit {
                visited[o] = true;
            }
            if (n * orbit.len()) % 2 == 1 {
                continue;
            }
            let class = reps.len() as u32;
            reps.push(start);
            for (k, &o) in orbit.iter().enumerate() {
                let sign = if (n * k).is_multiple_of(2) { 1 } else { -1 };
                class_of[o] = Some((class, sign));
            }
        }
        Self { degree: n, reps, class_of }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class and sign of a tuple index.
    pub fn class(&self, idx: usize) -> Option<(usize, i64)> {
        self.class_of[idx].map(|(c, s)| (c as usize, s as i64))
    }

    /// Projects a vector of `A^{⊗(n+1)}` to the quotient.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_terms(
            v.iter()
                .filter_map(|(i, c)| self.class(i).map(|(k, s)| (k, if s == 1 { c.clone() } else { -c.clone() })))
                .collect(),
        )
    }
}

/// Connes complex `C^λ_n = A^{⊗(n+1)} / (1 - t)`.
pub struct ConnesBuilder {
    a: Arc<Algebra>,
    bases: Vec<ConnesBasis>,
}

impl ConnesBuilder {
    pub fn new(a: Arc<Algebra>, cutoff: usize, limits: Limits) -> Result<Self> {
        let d = a.dim();
        let mut bases = Vec::with_capacity(cutoff + 1);
        for n in 0..=cutoff {
            limits.check(&format!("CLAMBDA({})", a.name()), n, power(d, n + 1))?;
            bases.push(ConnesBasis::new(d, n));
        }
        Ok(Self { a, bases })
    }

    pub fn basis(&self, n: usize) -> &ConnesBasis {
        &self.bases[n]
    }

    pub fn into_bases(self) -> Vec<ConnesBasis> {
        self.bases
    }
}

impl Builder for ConnesBuilder {
    fn name(&self) -> String {
        format!("CLAMBDA({})", self.a.name())
    }

    fn dim(&self, n: usize) -> u128 {
        self.bases.get(n).map_or(0, |b| b.len() as u128)
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let d = self.a.dim();
        let xs = decode(self.bases[n].reps[col], n + 1, d);
        let target = &self.bases[n - 1];
        let mut out = Vec::new();
        hochschild_terms(&self.a, &xs, &mut out, |ys| target.class(encode(ys, d)));
        SparseVec::from_terms(out)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        let xs = decode(self.bases[n].reps[idx], n + 1, self.a.dim());
        format!("[{}]", tensor_label(&self.a, &xs, ","))
    }
}
