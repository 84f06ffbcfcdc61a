//! Boundary matrices persisted on disk and reused across complex sets.

use std::sync::Arc;

use leibniz::algebra::builtin_from_spec;
use leibniz::chain_maps::ComplexSet;
use leibniz::complexes::{ComplexKind, Limits};
use leibniz::linhom::cache::MatrixCache;

fn main() -> leibniz::Result<()> {
    let root = std::env::temp_dir().join(format!("leibniz-cache-example-{}", std::process::id()));
    let cache = Arc::new(MatrixCache::open(&root)?);
    let a = Arc::new(builtin_from_spec("split:2")?);
    for pass in ["cold", "warm"] {
        let set = ComplexSet::new(a.clone(), Limits::default()).with_cache(cache.clone());
        for kind in [ComplexKind::Cl, ComplexKind::Chh, ComplexKind::Clambda] {
            set.get(kind, 4)?;
        }
        println!("{pass}: {} hits, {} misses", cache.hits(), cache.misses());
    }
    println!("files under {}", cache.root().display());
    std::fs::remove_dir_all(&root)?;
    Ok(())
}
