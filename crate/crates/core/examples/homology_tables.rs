//! Betti numbers of every complex kind over one algebra.

use std::sync::Arc;

use leibniz::algebra::builtin_from_spec;
use leibniz::chain_maps::ComplexSet;
use leibniz::complexes::{ComplexKind, Limits};
use leibniz::linhom::betti_numbers;

fn main() -> leibniz::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cyclic:2".into());
    let cutoff = 4;
    let set = ComplexSet::new(Arc::new(builtin_from_spec(&spec)?), Limits::default());
    println!("{spec}, degrees < {cutoff} (degree {cutoff} only bounds the table)");
    for kind in ComplexKind::ALL {
        match set.get(kind, cutoff) {
            Ok(c) => println!("{:>12}  dims {:?}  betti {:?}", kind.homology_name(), c.dims(), betti_numbers(&c)),
            Err(e) => println!("{:>12}  {e}", kind.homology_name()),
        }
    }
    Ok(())
}
