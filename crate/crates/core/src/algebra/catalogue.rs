use std::sync::Arc;

use super::group::{cyclic_group, symmetric_group_s3, FiniteGroup};
use super::morphism::AlgebraMorphism;
use super::{Algebra, MatrixMeta};
use crate::error::{Error, Result};
use crate::linhom::{q, SparseMatrix, SparseVec};

/// Default cap on the dimension of a matrix algebra.
pub const DEFAULT_MATRIX_BOUND: usize = 100_000;

#[derive(Clone, Copy, Debug)]
pub struct BuiltinInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub default_params: &'static [i64],
    pub description: &'static str,
}

pub fn catalogue() -> &'static [BuiltinInfo] {
    &[
        BuiltinInfo { name: "rationals", params: "", default_params: &[], description: "Q" },
        BuiltinInfo { name: "dual", params: "", default_params: &[], description: "Q[ε]/(ε²)" },
        BuiltinInfo { name: "truncated_poly", params: "m", default_params: &[3], description: "Q[x]/(x^m)" },
        BuiltinInfo { name: "split", params: "m", default_params: &[2], description: "Q^m, idempotent basis" },
        BuiltinInfo { name: "cyclic", params: "n", default_params: &[2], description: "group algebra Q[C_n]" },
        BuiltinInfo { name: "s3", params: "", default_params: &[], description: "group algebra Q[S_3]" },
    ]
}

/// Splits `name:p1:p2` into a name and integer parameters.
pub fn parse_builtin(spec: &str) -> Result<(String, Vec<i64>)> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default().to_string();
    let params = parts
        .map(|p| p.parse::<i64>().map_err(|_| Error::InvalidParameter(format!("`{p}` in `{spec}`"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((name, params))
}

fn positive(name: &str, params: &[i64], default: i64) -> Result<usize> {
    match params {
        [] => Ok(default as usize),
        [m] if *m > 0 => Ok(*m as usize),
        [m] => Err(Error::InvalidParameter(format!("{name} needs a positive parameter, got {m}"))),
        _ => Err(Error::InvalidParameter(format!("{name} takes one parameter"))),
    }
}

fn no_params(name: &str, params: &[i64]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} takes no parameters")))
    }
}

pub fn builtin_algebra(name: &str, params: &[i64]) -> Result<Algebra> {
    match name {
        "rationals" | "Q" => {
            no_params(name, params)?;
            truncated_poly(1, "rationals")
        }
        "dual" => {
            no_params(name, params)?;
            let mut a = truncated_poly(2, "dual")?;
            a.basis = vec!["1".into(), "ε".into()];
            Ok(a)
        }
        "truncated_poly" => {
            let m = positive(name, params, 3)?;
            truncated_poly(m, &format!("truncated_poly:{m}"))
        }
        "split" => {
            let m = positive(name, params, 2)?;
            split(m)
        }
        "cyclic" | "group_cyclic" => {
            let n = positive(name, params, 2)?;
            Ok(group_algebra(&format!("cyclic:{n}"), &cyclic_group(n)?))
        }
        "s3" | "S3" | "group_s3" => {
            no_params(name, params)?;
            Ok(group_algebra("s3", &symmetric_group_s3()))
        }
        _ => Err(Error::UnknownAlgebra(name.to_string())),
    }
}

/// Parses `name[:params]`, or `M<N>(<spec>)` for a matrix algebra, and
/// builds it.
pub fn builtin_from_spec(spec: &str) -> Result<Algebra> {
    if let Some((size, inner)) = matrix_spec(spec) {
        let size: usize = size.parse().map_err(|_| Error::InvalidParameter(format!("matrix size in `{spec}`")))?;
        return matrix_algebra(&Arc::new(builtin_from_spec(inner)?), size);
    }
    let (name, params) = parse_builtin(spec)?;
    builtin_algebra(&name, &params)
}

fn matrix_spec(spec: &str) -> Option<(&str, &str)> {
    let rest = spec.strip_prefix('M')?.strip_suffix(')')?;
    let (size, inner) = rest.split_once('(')?;
    (!size.is_empty() && size.bytes().all(|b| b.is_ascii_digit())).then_some((size, inner))
}

fn truncated_poly(m: usize, name: &str) -> Result<Algebra> {
    let basis = (0..m)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let table = (0..m * m)
        .map(|ij| {
            let k = ij / m + ij % m;
            if k < m {
                SparseVec::unit(k)
            } else {
                SparseVec::new()
            }
        })
        .collect();
    Algebra::from_table(name, basis, SparseVec::unit(0), table)
}

fn split(m: usize) -> Result<Algebra> {
    let basis = (1..=m).map(|k| format!("e{k}")).collect();
    let table =
        (0..m * m).map(|ij| if ij / m == ij % m { SparseVec::unit(ij % m) } else { SparseVec::new() }).collect();
    let unit = SparseVec::from_terms((0..m).map(|k| (k, q(1))).collect());
    Algebra::from_table(format!("split:{m}"), basis, unit, table)
}

/// Group algebra `Q[G]` with basis the group elements.
pub fn group_algebra(name: &str, g: &FiniteGroup) -> Algebra {
    let n = g.order();
    let table = (0..n * n).map(|ij| SparseVec::unit(g.mul(ij / n, ij % n))).collect();
    Algebra::from_table(name, g.names().to_vec(), SparseVec::unit(g.identity()), table)
        .expect("group table has the right shape")
        .with_group(g.clone())
}

/// Group algebra from a raw Cayley table; elements are named `g0, g1, ...`.
pub fn group_algebra_from_cayley(name: &str, cayley: Vec<Vec<usize>>) -> Result<Algebra> {
    let names = (0..cayley.len()).map(|k| format!("g{k}")).collect();
    let g = FiniteGroup::from_cayley(names, cayley)?;
    Ok(group_algebra(name, &g))
}

pub fn matrix_algebra(base: &Arc<Algebra>, n: usize) -> Result<Algebra> {
    matrix_algebra_bounded(base, n, DEFAULT_MATRIX_BOUND)
}

/// `M_N(A)` with basis `E^{e_b}_{ij}` in lexicographic order of `(i, j, b)`.
pub fn matrix_algebra_bounded(base: &Arc<Algebra>, n: usize, bound: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("matrix size must be positive".into()));
    }
    let d = base.dim();
    let dim = n.checked_mul(n).and_then(|x| x.checked_mul(d)).filter(|&x| x <= bound).ok_or(Error::ResourceBound {
        what: format!("M_{n}({})", base.name()),
        degree: 1,
        dim: (n as u128) * (n as u128) * (d as u128),
        bound,
    })?;
    let meta = MatrixMeta { size: n, base: base.clone() };
    let mut basis = Vec::with_capacity(dim);
    for i in 0..n {
        for j in 0..n {
            for b in 0..d {
                basis.push(format!("E{}{}[{}]", i + 1, j + 1, base.basis_names()[b]));
            }
        }
    }
    let mut table = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        let (i, j, a) = meta.split(x);
        for y in 0..dim {
            let (k, l, b) = meta.split(y);
            if j != k {
                table.push(SparseVec::new());
                continue;
            }
            let terms = base.mul_basis(a, b).iter().map(|(c, v)| (meta.index(i, l, c), v.clone())).collect();
            table.push(SparseVec::from_terms(terms));
        }
    }
    let unit = SparseVec::from_terms(
        (0..n)
            .flat_map(|i| base.unit().iter().map(move |(b, v)| (i, b, v.clone())))
            .map(|(i, b, v)| (meta.index(i, i, b), v))
            .collect(),
    );
    Ok(Algebra::from_table(format!("M_{n}({})", base.name()), basis, unit, table)?.with_matrix(meta))
}

/// Morphism catalogue: `trunc3_to_q` (x ↦ 0), `dual_to_q` (ε ↦ 0),
/// `split2_to_q` (projection to the first factor), `id:<algebra>`.
pub fn builtin_morphism(name: &str) -> Result<AlgebraMorphism> {
    let to_q = |src: Algebra| -> Result<AlgebraMorphism> {
        let d = src.dim();
        let m = SparseMatrix::from_triplets(1, d, vec![(0, 0, q(1))])?;
        AlgebraMorphism::new(Arc::new(src), Arc::new(builtin_algebra("rationals", &[])?), m)
    };
    match name {
        "trunc3_to_q" => to_q(builtin_algebra("truncated_poly", &[3])?),
        "dual_to_q" => to_q(builtin_algebra("dual", &[])?),
        "split2_to_q" => to_q(builtin_algebra("split", &[2])?),
        _ => match name.strip_prefix("id:") {
            Some(spec) => Ok(AlgebraMorphism::identity(Arc::new(builtin_from_spec(spec)?))),
            None => Err(Error::UnknownAlgebra(format!("morphism `{name}`"))),
        },
    }
}

pub fn morphism_catalogue() -> &'static [&'static str] {
    &["trunc3_to_q", "dual_to_q", "split2_to_q", "id:<algebra>"]
}
