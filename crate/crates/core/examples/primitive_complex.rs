//! The complex P_*(A) built from cyclic permutations, the face maps of
//! k[U_n], and the embedding of Hochschild chains.

use std::sync::Arc;

use leibniz::algebra::builtin_from_spec;
use leibniz::chain_maps::{embed_cy, lift_p, theta_nf_lift_p, ComplexSet};
use leibniz::complexes::{face_u, ComplexKind, Limits, Permutation};
use leibniz::linhom::{betti_numbers, induced_map, rank};

fn main() -> leibniz::Result<()> {
    let sigma = Permutation::from_cycle_word(&[0, 2, 1, 3]);
    println!("σ = {:?}, orbit word {:?}; faces:", sigma.images(), sigma.cycle_word()?);
    for i in 0..4 {
        println!("  d_{i} σ = {:?}", face_u(&sigma, i)?.images());
    }

    let set = ComplexSet::new(Arc::new(builtin_from_spec("dual")?), Limits::default());
    let c = 4;
    let p = set.get(ComplexKind::P, c)?;
    println!("P(dual): dims {:?}, betti {:?}", p.dims(), betti_numbers(&p));
    println!("HH(dual): betti {:?}", betti_numbers(&*set.get(ComplexKind::Chh, c)?));
    let e = embed_cy(&set, c)?;
    for n in 0..c {
        let m = induced_map(&e, n)?;
        println!("  embed_cy on H_{n}: {}x{} of rank {}", m.rows(), m.cols(), rank(&m));
    }

    let a = set.algebra();
    let l = lift_p(a, 3, 2)?;
    let t = theta_nf_lift_p(a, 3, 2)?;
    println!("lift_P: P_2 -> CL_3(gl_3): {:?}, Θ_NF ∘ lift_P rank {}", l.shape(), rank(&t));
    Ok(())
}
