use std::fmt::Write as _;

use super::{AlgebraAction, EXIT_FAILED, EXIT_OK};
use crate::algebra::io::{algebra_from_json, load_algebra, morphism_from_json};
use crate::algebra::{builtin_algebra, catalogue, morphism_catalogue, validate_algebra, validate_morphism, Algebra};
use crate::error::Result;

pub(super) fn run(action: &AlgebraAction) -> Result<i32> {
    match action {
        AlgebraAction::List => {
            print!("{}", list());
            Ok(EXIT_OK)
        }
        AlgebraAction::Validate { file } => {
            let text = std::fs::read_to_string(file)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            if value.get("matrix").is_some() {
                let f = morphism_from_json(&text)?;
                let r = validate_morphism(&f);
                println!("{}", serde_json::to_string_pretty(&r)?);
                return Ok(if r.passed { EXIT_OK } else { EXIT_FAILED });
            }
            let a = algebra_from_json(&text)?;
            let r = validate_algebra(&a);
            println!("{}", serde_json::to_string_pretty(&r)?);
            let names = a.basis_names();
            for &(i, j, k) in &r.associativity_failures {
                eprintln!("not associative: ({0} {1}) {2} ≠ {0} ({1} {2})", names[i], names[j], names[k]);
            }
            for &i in &r.unit_failures {
                eprintln!("unit fails on {}", names[i]);
            }
            Ok(if r.passed { EXIT_OK } else { EXIT_FAILED })
        }
        AlgebraAction::Inspect { name, json } => {
            let a = load_algebra(name)?;
            if *json {
                println!("{}", crate::algebra::io::algebra_to_json(&a));
            } else {
                print!("{}", inspect(&a));
            }
            Ok(EXIT_OK)
        }
    }
}

fn list() -> String {
    let mut out = String::from("| name | params | dim | description |\n|---|---|---|---|\n");
    for info in catalogue() {
        let dim = builtin_algebra(info.name, info.default_params).map(|a| a.dim()).unwrap_or(0);
        let params = if info.params.is_empty() {
            String::new()
        } else {
            format!("{} (default {:?})", info.params, info.default_params)
        };
        let _ = writeln!(out, "| {} | {} | {} | {} |", info.name, params, dim, info.description);
    }
    out.push_str("\nMatrix algebras: M<N>(<spec>), e.g. M2(dual).\n\nMorphisms:\n");
    for m in morphism_catalogue() {
        let _ = writeln!(out, "  {m}");
    }
    out
}

fn inspect(a: &Algebra) -> String {
    let names = a.basis_names();
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", a.name());
    let _ = writeln!(out, "dim: {}", a.dim());
    let _ = writeln!(out, "basis: {{{}}}", names.join(", "));
    let _ = writeln!(out, "unit: {}", show(a.unit(), names));
    let _ = writeln!(out, "commutative: {}", a.is_commutative());
    if let Some(g) = a.group() {
        let _ = writeln!(out, "group: order {}, {} conjugacy classes", g.order(), g.conjugacy_classes());
    }
    if let Some(m) = a.matrix_meta() {
        let _ = writeln!(out, "matrix algebra: M_{}({})", m.size, m.base.name());
    }
    let _ = writeln!(out, "content hash: {}", a.content_hash());
    let r = validate_algebra(a);
    let _ = writeln!(out, "valid: {}", r.passed);
    if a.dim() <= 12 {
        out.push_str("\nproducts:\n");
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let _ = writeln!(out, "  {} · {} = {}", names[i], names[j], show(a.mul_basis(i, j), names));
            }
        }
    }
    out
}

fn show(v: &crate::linhom::SparseVec, names: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(i, c)| match c.to_string().as_str() {
            "1" => names[i].clone(),
            "-1" => format!("-{}", names[i]),
            s => format!("{s} {}", names[i]),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
