use super::checks::{fan_out, Checks, Outcome};
use super::oracle::{is_truncated_poly, truncated_poly_oracle};
use super::Context;
use crate::chain_maps::{embed_cy, ComplexSet};
use crate::complexes::{face_u, ComplexKind, CyclicClass, PBuilder};
use crate::linhom::{betti_numbers, induced_image_rank, Witness};

/// Largest `n` for the exhaustive face identities on `U_n`.
const FACE_ORDER: usize = 5;

pub(crate) fn suite_appendix(ctx: &Context<'_>) -> Vec<Checks> {
    let mut out = fan_out(ctx, |spec, checks| match ctx.load(spec) {
        Ok(set) => appendix_checks(ctx, &set, checks),
        Err(e) => *checks = Checks::setup_failed(spec, e),
    });
    let mut u = Checks::new("U_n");
    u.run("presimplicial", || Ok(presimplicial(FACE_ORDER)));
    out.push(u);
    out
}

fn presimplicial(max: usize) -> Outcome {
    let mut count = 0usize;
    for m in 3..=max {
        let n = m - 1;
        for sigma in CyclicClass::new(m).elements() {
            for j in 1..=n {
                for i in 0..j {
                    let lhs = face_u(sigma, j).and_then(|s| face_u(&s, i));
                    let rhs = face_u(sigma, i).and_then(|s| face_u(&s, j - 1));
                    match (lhs, rhs) {
                        (Ok(l), Ok(r)) if l == r && l.is_cyclic() => count += 1,
                        _ => {
                            return Outcome::Fail(
                                format!("d_{i} d_{j} ≠ d_{} d_{i} on U_{m}", j - 1),
                                Some(Witness { degree: n, column: 0, detail: format!("σ = {sigma}") }),
                            )
                        }
                    }
                }
            }
        }
    }
    Outcome::Pass(format!("{count} identities on U_m, m ≤ {max}"))
}

fn appendix_checks(ctx: &Context<'_>, set: &ComplexSet, checks: &mut Checks) {
    let c = ctx.config.cutoff;
    let a = set.algebra();
    checks.run("boundary_squared/P", || {
        let p = set.get(ComplexKind::P, c)?;
        Ok(Outcome::verified(p.verify_boundary_squares(), format!("dims {:?}", p.dims())))
    });
    checks.run("diagonal_faces", || {
        let p = set.get(ComplexKind::P, c)?;
        let b = PBuilder::new(a.clone(), c);
        for n in 1..=c {
            let d = p.boundary(n)?;
            if let Some(col) = (0..d.cols()).find(|&j| b.diagonal_boundary_column(n, j) != *d.column(j)) {
                return Ok(Outcome::Fail(
                    format!("diagonal faces differ from the transported boundary in degree {n}"),
                    Some(Witness { degree: n, column: col, detail: b.diagonal_boundary_column(n, col).to_string() }),
                ));
            }
        }
        Ok(Outcome::Pass(format!("every basis element, degrees ≤ {c}")))
    });
    if a.dim() == 1 {
        checks.run("u_acyclic", || {
            let betti = betti_numbers(&*set.get(ComplexKind::P, c + 1)?);
            let ok = betti.iter().enumerate().all(|(n, &b)| b == usize::from(n == 0));
            Ok(Outcome::check(ok, format!("betti H_n(P(Q)), n ≤ {c}: {betti:?}")))
        });
    }
    checks.run("chain_map/EMBED_CY", || Ok(Outcome::verified(embed_cy(set, c)?.verify(), format!("degrees ≤ {c}"))));
    checks.run("embed_cy_iso", || {
        let e = embed_cy(set, c)?;
        let hh = betti_numbers(e.source());
        let hp = betti_numbers(e.target());
        let ranks = (0..c).map(|n| induced_image_rank(&e, n)).collect::<crate::error::Result<Vec<_>>>()?;
        let ok = hh == hp && ranks == hh;
        Ok(Outcome::check(ok, format!("HH betti {hh:?}, H(P) betti {hp:?}, induced ranks {ranks:?}")))
    });
    if a.dim() >= 2 && is_truncated_poly(a) {
        checks.run("periodic_oracle", || {
            let hh = betti_numbers(&*set.get(ComplexKind::Chh, c)?);
            let oracle = betti_numbers(&truncated_poly_oracle(a, c)?);
            Ok(Outcome::check(hh == oracle, format!("HH betti {hh:?}, periodic resolution {oracle:?}")))
        });
    }
}
