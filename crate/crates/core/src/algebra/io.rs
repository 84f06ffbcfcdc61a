//! JSON files for algebras and morphisms.
//!
//! Algebra: `{"name", "dim", "basis": [..], "unit": ["p/q", ..],
//! "table": [[i, j, [[k, "p/q"], ..]], ..]}` with omitted products zero.
//! Morphism: `{"source", "target", "matrix": [["p/q", ..], ..]}` where source
//! and target are built-in names or inline algebra objects.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::catalogue::builtin_from_spec;
use super::morphism::AlgebraMorphism;
use super::Algebra;
use crate::error::{Error, Result};
use crate::linhom::{format_rational, parse_rational, SparseMatrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub table: Vec<(usize, usize, Vec<(usize, String)>)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Builtin(String),
    Inline(AlgebraFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismFile {
    pub source: AlgebraRef,
    pub target: AlgebraRef,
    pub matrix: Vec<Vec<String>>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra) -> Self {
        let d = a.dim();
        let mut table = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let v = a.mul_basis(i, j);
                if !v.is_zero() {
                    table.push((i, j, v.iter().map(|(k, c)| (k, format_rational(c))).collect()));
                }
            }
        }
        Self {
            name: a.name().to_string(),
            dim: d,
            basis: a.basis_names().to_vec(),
            unit: a.unit().to_dense(d).iter().map(format_rational).collect(),
            table,
        }
    }

    /// Builds the algebra; shape errors are reported, axioms are not checked.
    pub fn to_algebra(&self) -> Result<Algebra> {
        let d = self.dim;
        if self.basis.len() != d {
            return Err(Error::DimensionMismatch { expected: d, actual: self.basis.len() });
        }
        if self.unit.len() != d {
            return Err(Error::DimensionMismatch { expected: d, actual: self.unit.len() });
        }
        let unit = SparseVec::from_dense(&self.unit.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?);
        let mut table = vec![SparseVec::new(); d * d];
        for (i, j, entries) in &self.table {
            if *i >= d || *j >= d {
                return Err(Error::InvalidAlgebra(format!("table entry ({i}, {j}) out of range")));
            }
            let terms = entries
                .iter()
                .map(|(k, s)| {
                    if *k >= d {
                        return Err(Error::InvalidAlgebra(format!("coordinate {k} out of range in ({i}, {j})")));
                    }
                    Ok((*k, parse_rational(s)?))
                })
                .collect::<Result<Vec<_>>>()?;
            table[i * d + j] = table[i * d + j].add(&SparseVec::from_terms(terms));
        }
        Algebra::from_table(self.name.clone(), self.basis.clone(), unit, table)
    }
}

impl AlgebraRef {
    pub fn resolve(&self) -> Result<Algebra> {
        match self {
            AlgebraRef::Builtin(spec) => builtin_from_spec(spec),
            AlgebraRef::Inline(file) => file.to_algebra(),
        }
    }
}

pub fn algebra_to_json(a: &Algebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("serializable")
}

pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    file.to_algebra()
}

pub fn read_algebra(path: &Path) -> Result<Algebra> {
    algebra_from_json(&std::fs::read_to_string(path)?)
}

/// A built-in spec such as `truncated_poly:3`, or else a path to a JSON file.
pub fn load_algebra(spec: &str) -> Result<Algebra> {
    match builtin_from_spec(spec) {
        Ok(a) => Ok(a),
        Err(Error::UnknownAlgebra(_)) if Path::new(spec).exists() => read_algebra(Path::new(spec)),
        Err(e) => Err(e),
    }
}

pub fn morphism_from_json(text: &str) -> Result<AlgebraMorphism> {
    let file: MorphismFile = serde_json::from_str(text)?;
    let source = Arc::new(file.source.resolve()?);
    let target = Arc::new(file.target.resolve()?);
    let rows = file
        .matrix
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != target.dim() || rows.iter().any(|r| r.len() != source.dim()) {
        return Err(Error::ShapeMismatch(format!("morphism matrix must be {} × {}", target.dim(), source.dim())));
    }
    AlgebraMorphism::new(source, target, SparseMatrix::from_dense(&rows))
}

pub fn morphism_to_json(f: &AlgebraMorphism) -> String {
    let file = MorphismFile {
        source: AlgebraRef::Inline(AlgebraFile::from_algebra(f.source())),
        target: AlgebraRef::Inline(AlgebraFile::from_algebra(f.target())),
        matrix: f.matrix().to_dense().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::super::catalogue::{builtin_algebra, builtin_morphism};
    use super::super::validate_algebra;
    use super::*;

    #[test]
    fn algebra_round_trip() {
        let a = builtin_algebra("s3", &[]).unwrap();
        let text = algebra_to_json(&a);
        let b = algebra_from_json(&text).unwrap();
        assert_eq!(a.content_hash(), b.content_hash());
        assert!(validate_algebra(&b).passed);
    }

    #[test]
    fn rationals_are_reduced_fractions() {
        let text = algebra_to_json(&builtin_algebra("dual", &[]).unwrap());
        assert!(text.contains("\"1/1\""));
        assert!(text.contains("\"0/1\""));
    }

    #[test]
    fn non_associative_file_fails_validation() {
        // a·a = b, b·a = a, everything else through the unit or zero
        let text = r#"{"name":"broken","dim":3,"basis":["1","a","b"],"unit":["1/1","0/1","0/1"],
            "table":[[0,0,[[0,"1/1"]]],[0,1,[[1,"1/1"]]],[0,2,[[2,"1/1"]]],[1,0,[[1,"1/1"]]],
            [2,0,[[2,"1/1"]]],[1,1,[[2,"1/1"]]],[2,1,[[1,"1/1"]]]]}"#;
        let r = validate_algebra(&algebra_from_json(text).unwrap());
        assert!(!r.passed);
        assert!(r.associativity_failures.contains(&(1, 1, 1)));
    }

    #[test]
    fn malformed_files_are_errors() {
        assert!(algebra_from_json("{").is_err());
        let short_unit = r#"{"name":"x","dim":2,"basis":["1","a"],"unit":["1/1"],"table":[]}"#;
        assert!(algebra_from_json(short_unit).is_err());
    }

    #[test]
    fn morphism_round_trip() {
        let f = builtin_morphism("trunc3_to_q").unwrap();
        let g = morphism_from_json(&morphism_to_json(&f)).unwrap();
        assert_eq!(f.matrix(), g.matrix());
        let by_name = r#"{"source":"dual","target":"rationals","matrix":[["1","0"]]}"#;
        assert_eq!(morphism_from_json(by_name).unwrap().matrix().shape(), (1, 2));
    }
}
