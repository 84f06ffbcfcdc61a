//! Matrix algebras: trace and corner inclusion on Hochschild chains, and
//! surjectivity of `tr ∘ φ` onto HH_n(A).

use std::sync::Arc;

use leibniz::algebra::{builtin_from_spec, matrix_algebra};
use leibniz::chain_maps::{corner, trace, trace_phi_between, ComplexSet};
use leibniz::complexes::{ComplexKind, Limits};
use leibniz::linhom::{betti_numbers, induced_image_rank, ChainMapRep};

fn main() -> leibniz::Result<()> {
    let limits = Limits::new(1_000_000);
    let base = Arc::new(builtin_from_spec("dual")?);
    let gl = Arc::new(matrix_algebra(&base, 3)?);
    let (sa, sg) = (ComplexSet::new(base, limits), ComplexSet::new(gl.clone(), limits));
    println!("{} has dimension {}", gl.name(), gl.dim());

    let c = 2;
    let tc = trace(&sg, &sa, c)?.compose(&corner(&sa, &sg, c)?)?;
    let id = ChainMapRep::identity(sa.get(ComplexKind::Chh, c)?);
    println!("tr ∘ corner = id on chains: {}", tc.first_difference(&id)?.is_none());

    let tp = trace_phi_between(&sg, &sa, c + 1, c + 1)?;
    println!("tr ∘ φ is a chain map: {}", tp.verify().is_ok());
    let hh = betti_numbers(tp.target());
    for n in 0..=c {
        println!("  HL_{} -> HH_{n}: image rank {} of {}", n + 1, induced_image_rank(&tp, n + 1)?, hh[n]);
    }
    Ok(())
}
