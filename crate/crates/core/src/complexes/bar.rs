use itertools::Itertools;

use super::tensor::{decode, encode, power};
use super::Builder;
use crate::algebra::FiniteGroup;
use crate::linhom::{q, SparseVec};

/// Bar complex `B_n = k[G^n]`, `B_0 = k`, with faces dropping the first
/// entry, multiplying neighbours, and dropping the last entry.
pub struct BarBuilder {
    name: String,
    g: FiniteGroup,
}

impl BarBuilder {
    pub fn new(name: &str, g: FiniteGroup) -> Self {
        Self { name: name.to_string(), g }
    }
}

impl Builder for BarBuilder {
    fn name(&self) -> String {
        format!("BAR({})", self.name)
    }

    fn dim(&self, n: usize) -> u128 {
        power(self.g.order(), n)
    }

    fn boundary_column(&self, n: usize, col: usize) -> SparseVec {
        let o = self.g.order();
        let xs = decode(col, n, o);
        let mut terms = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let sign = q(if i % 2 == 0 { 1 } else { -1 });
            let ys: Vec<usize> = if i == 0 {
                xs[1..].to_vec()
            } else if i == n {
                xs[..n - 1].to_vec()
            } else {
                let mut ys = xs[..i - 1].to_vec();
                ys.push(self.g.mul(xs[i - 1], xs[i]));
                ys.extend_from_slice(&xs[i + 1..]);
                ys
            };
            terms.push((encode(&ys, o), sign));
        }
        SparseVec::from_terms(terms)
    }

    fn label(&self, n: usize, idx: usize) -> String {
        let xs = decode(idx, n, self.g.order());
        format!("[{}]", xs.iter().map(|&x| self.g.names()[x].as_str()).join("|"))
    }
}
