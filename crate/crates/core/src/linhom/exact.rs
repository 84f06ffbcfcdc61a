use rayon::prelude::*;
use serde::Serialize;

use super::echelon::rank;
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// Exactness at one interior node `V_k` of `... -> V_{k-1} -> V_k -> V_{k+1} -> ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    pub label: String,
    pub dim: usize,
    pub composite_zero: bool,
    pub incoming_rank: usize,
    pub outgoing_nullity: usize,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub nodes: Vec<NodeReport>,
    pub exact: bool,
}

/// Checks exactness of `maps[0], maps[1], ...` (so `maps[k+1] ∘ maps[k]`
/// must compose) at every interior node. `labels[k]` names the node between
/// `maps[k]` and `maps[k+1]`; missing labels are numbered.
pub fn exactness_check(maps: &[SparseMatrix], labels: &[String]) -> Result<ExactnessReport> {
    for (k, w) in maps.windows(2).enumerate() {
        if w[1].cols() != w[0].rows() {
            return Err(Error::ShapeMismatch(format!(
                "map {} has {} rows but map {} has {} columns",
                k,
                w[0].rows(),
                k + 1,
                w[1].cols()
            )));
        }
    }
    let ranks: Vec<usize> = maps.par_iter().map(rank).collect();
    let nodes: Vec<NodeReport> = maps
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let composite_zero = w[1].mul(&w[0]).expect("checked").is_zero();
            let incoming_rank = ranks[k];
            let outgoing_nullity = w[1].cols() - ranks[k + 1];
            NodeReport {
                label: labels.get(k).cloned().unwrap_or_else(|| format!("node {}", k + 1)),
                dim: w[0].rows(),
                composite_zero,
                incoming_rank,
                outgoing_nullity,
                exact: composite_zero && incoming_rank == outgoing_nullity,
            }
        })
        .collect();
    let exact = nodes.iter().all(|n| n.exact);
    Ok(ExactnessReport { nodes, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn short_exact_sequence() {
        // 0 -> Q -> Q^2 -> Q -> 0
        let maps = vec![
            SparseMatrix::zeros(1, 0),
            SparseMatrix::from_i64_rows(&[&[1], &[0]]),
            SparseMatrix::from_i64_rows(&[&[0, 1]]),
            SparseMatrix::zeros(0, 1),
        ];
        let r = exactness_check(&maps, &[]).unwrap();
        assert!(r.exact);
        assert_eq!(r.nodes.len(), 3);
    }

    #[test]
    fn repeated_identities_fail() {
        let maps = vec![SparseMatrix::identity(2), SparseMatrix::identity(2), SparseMatrix::identity(2)];
        let r = exactness_check(&maps, &[]).unwrap();
        assert!(!r.exact);
        assert!(!r.nodes[0].composite_zero);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let maps = vec![SparseMatrix::identity(2), SparseMatrix::identity(3)];
        assert!(exactness_check(&maps, &[]).is_err());
    }
}
