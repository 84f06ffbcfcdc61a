//! Kähler forms of a commutative algebra: `p` onto Ω^n and `ε_Ω ∘ p = φ`
//! up to boundaries.

use std::sync::Arc;

use leibniz::algebra::builtin_from_spec;
use leibniz::chain_maps::{kahler_maps, phi, ComplexSet};
use leibniz::complexes::{ComplexKind, Limits};
use leibniz::linhom::{betti_numbers, homology, rank};

fn main() -> leibniz::Result<()> {
    let set = ComplexSet::new(Arc::new(builtin_from_spec("truncated_poly:3")?), Limits::default());
    let c = 3;
    let cl = set.get(ComplexKind::Cl, c + 1)?;
    println!("HL betti {:?}", betti_numbers(&cl));

    let km = kahler_maps(&set, c)?;
    println!("dim Ω^n: {:?}", km.omega.dims());
    println!("p is a chain map: {}", km.p.verify().is_ok());
    for n in 0..=c {
        let p = km.p.map(n + 1).expect("in range");
        println!("  p onto Ω^{n}: {}", rank(p) == km.omega.dim(n));
    }

    let diff = km.epsilon.compose(&km.p)?.sub(&phi(&set, c)?)?;
    for n in 1..=c {
        let h = homology(diff.target(), n - 1)?;
        let m = diff.map(n).expect("in range");
        let ok = (0..m.cols()).all(|j| h.is_boundary(m.column(j)));
        println!("  ε_Ω∘p - φ lands in boundaries from CL_{n}: {ok}");
    }
    Ok(())
}
