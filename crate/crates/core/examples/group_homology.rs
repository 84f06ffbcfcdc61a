//! Group rings: the bar complex of BG as a retract of Hochschild chains.

use std::sync::Arc;

use leibniz::algebra::builtin_from_spec;
use leibniz::chain_maps::{bar_iota, bar_pi, ComplexSet};
use leibniz::complexes::{ComplexKind, Limits};
use leibniz::linhom::{betti_numbers, ChainMapRep};

fn main() -> leibniz::Result<()> {
    for spec in ["cyclic:2", "cyclic:3", "s3"] {
        let set = ComplexSet::new(Arc::new(builtin_from_spec(spec)?), Limits::default());
        let g = set.algebra().group().expect("group algebra");
        let c = 4;
        let pi_iota = bar_pi(&set, c)?.compose(&bar_iota(&set, c)?)?;
        let id = ChainMapRep::identity(set.get(ComplexKind::Bar, c)?);
        println!(
            "{spec}: order {}, {} conjugacy classes, π∘ι = id {}, H(BG; Q) {:?}, HH {:?}",
            g.order(),
            g.conjugacy_classes(),
            pi_iota.first_difference(&id)?.is_none(),
            betti_numbers(&*set.get(ComplexKind::Bar, c)?),
            betti_numbers(&*set.get(ComplexKind::Chh, c)?),
        );
    }
    Ok(())
}
