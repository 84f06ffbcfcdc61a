//! Relative homology of `Q[x]/(x³) -> Q` through mapping cones, and
//! exactness of the long exact sequence.

use leibniz::algebra::builtin_morphism;
use leibniz::chain_maps::{chh_map, ComplexSet};
use leibniz::complexes::Limits;
use leibniz::linhom::homology::induced_map_with;
use leibniz::linhom::{betti_numbers, exactness_check, homology, mapping_cone};

fn main() -> leibniz::Result<()> {
    let f = builtin_morphism("trunc3_to_q")?;
    let sa = ComplexSet::new(f.source().clone(), Limits::default());
    let sb = ComplexSet::new(f.target().clone(), Limits::default());
    let top = 3;
    let mc = mapping_cone(&chh_map(&f, &sa, &sb, top + 1, top + 2)?)?;
    println!("HH(A) {:?}", betti_numbers(mc.map.source()));
    println!("HH(B) {:?}", betti_numbers(mc.map.target()));
    println!("HH(f) {:?}", betti_numbers(&mc.cone));

    let (c, c2, m) = (mc.map.source(), mc.map.target(), &mc.cone);
    let mut maps = Vec::new();
    let mut labels = Vec::new();
    for n in (0..=top).rev() {
        let (hc, hc2, hm) = (homology(c, n)?, homology(c2, n)?, homology(m, n)?);
        if n < top {
            maps.push(induced_map_with(&mc.proj, &homology(m, n + 1)?, &hc)?);
        }
        maps.push(induced_map_with(&mc.map, &hc, &hc2)?);
        maps.push(induced_map_with(&mc.incl, &hc2, &hm)?);
        labels.extend([format!("H_{n}(A)"), format!("H_{n}(B)")]);
        if n > 0 {
            labels.push(format!("H_{n}(f)"));
        }
    }
    let report = exactness_check(&maps, &labels)?;
    for node in &report.nodes {
        println!("  {:>8}  dim {}  exact {}", node.label, node.dim, node.exact);
    }
    println!("exact at every interior node: {}", report.exact);
    Ok(())
}
