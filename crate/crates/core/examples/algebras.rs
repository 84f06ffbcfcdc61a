//! Built-in algebras, JSON round trips and axiom validation.

use leibniz::algebra::io::{algebra_from_json, algebra_to_json};
use leibniz::algebra::{builtin_from_spec, builtin_morphism, catalogue, multiply, validate_algebra, validate_morphism};
use leibniz::linhom::SparseVec;

fn main() -> leibniz::Result<()> {
    for info in catalogue() {
        let spec = match info.default_params {
            [] => info.name.to_string(),
            ps => format!("{}:{}", info.name, ps[0]),
        };
        let a = builtin_from_spec(&spec)?;
        println!("{spec:>18}  dim {:>2}  commutative {:<5}  {}", a.dim(), a.is_commutative(), info.description);
    }

    let m = builtin_from_spec("M2(dual)")?;
    println!("\n{} has dimension {}", m.name(), m.dim());

    let dual = builtin_from_spec("dual")?;
    let eps = dual.element(SparseVec::unit(1))?;
    println!("ε·ε is zero: {}", multiply(&dual, &eps, &eps)?.is_zero());

    let text = algebra_to_json(&dual);
    let back = algebra_from_json(&text)?;
    println!("round trip keeps the content hash: {}", back.content_hash() == dual.content_hash());
    println!("validation: {:?}", validate_algebra(&back));

    // x·1 = 1 breaks the unit
    let bad = r#"{"name": "bad", "dim": 2, "basis": ["1", "x"], "unit": ["1", "0"],
        "table": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[0, "1"]]], [1, 1, [[1, "1"]]]]}"#;
    let report = validate_algebra(&algebra_from_json(bad)?);
    println!("bad table: associativity {:?}, unit {:?}", report.associativity_failures, report.unit_failures);

    let f = builtin_morphism("trunc3_to_q")?;
    let r = validate_morphism(&f);
    println!("\n{}: surjective {}, kernel dim {}, nilpotency {}", r.morphism, r.surjective, r.kernel_dim, r.nilpotency);
    Ok(())
}
