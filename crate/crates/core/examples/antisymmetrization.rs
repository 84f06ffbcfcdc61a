//! The antisymmetrization map from Leibniz to Hochschild chains and the two
//! squares it sits in.

use std::sync::Arc;

use leibniz::algebra::builtin_from_spec;
use leibniz::chain_maps::{epsilon, phi, phi_with, proj_adjoint, proj_i, proj_lie, theta, ComplexSet};
use leibniz::complexes::Limits;
use leibniz::linhom::{induced_map, rank};

fn main() -> leibniz::Result<()> {
    let set = ComplexSet::new(Arc::new(builtin_from_spec("s3")?), Limits::default());
    let c = 3;

    let f = phi(&set, c)?;
    println!("φ is a chain map: {}", f.verify().is_ok());
    for n in 1..=c {
        println!("  rank φ_* on HL_{n} -> HH_{}: {}", n - 1, rank(&induced_map(&f, n)?));
    }

    let lhs = epsilon(&set, c)?.compose(&proj_adjoint(&set, c)?)?;
    println!("ε ∘ proj_adj = φ: {}", lhs.first_difference(&f)?.is_none());

    let lhs = proj_i(&set, c)?.compose(&f)?;
    let rhs = theta(&set, c)?.compose(&proj_lie(&set, c + 1)?)?;
    println!("I ∘ φ = θ ∘ proj_lie: {}", lhs.first_difference(&rhs)?.is_none());

    match phi_with(&set, c, true)?.verify() {
        Ok(()) => println!("broken φ unexpectedly commutes"),
        Err(w) => println!("broken φ: {w}"),
    }
    Ok(())
}
