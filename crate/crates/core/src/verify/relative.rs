use super::checks::{fan_out, Checks, Outcome};
use super::Context;
use crate::algebra::{builtin_morphism, validate_morphism, AlgebraMorphism, Nilpotency};
use crate::chain_maps::{chh_map, cl_map, clambda_map, proj_i, trace_phi_between, ComplexSet};
use crate::complexes::ComplexKind;
use crate::error::Result;
use crate::linhom::homology::induced_map_with;
use crate::linhom::{
    betti_numbers, cone_map, exactness_check, homology, induced_image_rank, mapping_cone, ChainMapRep, HomologyData,
    MappingCone, SparseMatrix,
};

pub(crate) fn suite_relative(ctx: &Context<'_>) -> Vec<Checks> {
    fan_out(ctx, |name, checks| {
        let setup = || -> Result<(AlgebraMorphism, ComplexSet, ComplexSet)> {
            let f = builtin_morphism(name)?;
            let (sa, sb) = (ctx.set_from(f.source().clone()), ctx.set_from(f.target().clone()));
            Ok((f, sa, sb))
        };
        match setup() {
            Ok((f, sa, sb)) => relative_checks(ctx, &f, &sa, &sb, checks),
            Err(e) => *checks = Checks::setup_failed(name, e),
        }
    })
}

fn functorial(
    kind: ComplexKind,
    f: &AlgebraMorphism,
    sa: &ComplexSet,
    sb: &ComplexSet,
    c: usize,
) -> Result<ChainMapRep> {
    match kind {
        ComplexKind::Cl => cl_map(f, sa, sb, c, c + 1),
        ComplexKind::Chh => chh_map(f, sa, sb, c, c + 1),
        _ => clambda_map(f, sa, sb, c, c + 1),
    }
}

fn relative_checks(ctx: &Context<'_>, f: &AlgebraMorphism, sa: &ComplexSet, sb: &ComplexSet, checks: &mut Checks) {
    let report = validate_morphism(f);
    let nilpotent = report.passed && report.surjective && matches!(report.nilpotency, Nilpotency::Degree(_));
    let identity =
        report.surjective && report.kernel_dim == 0 && sa.algebra().content_hash() == sb.algebra().content_hash();
    checks.run("morphism", || {
        let detail = format!(
            "surjective {}, kernel dim {}, nilpotency {}",
            report.surjective, report.kernel_dim, report.nilpotency
        );
        Ok(if report.passed { Outcome::Pass(detail) } else { Outcome::Fail(detail, None) })
    });
    let top = 3.min(ctx.config.cutoff - 1);
    for kind in [ComplexKind::Cl, ComplexKind::Chh, ComplexKind::Clambda] {
        let cone = functorial(kind, f, sa, sb, top + 1).and_then(|m| {
            let v = m.verify();
            Ok((mapping_cone(&m)?, v))
        });
        let (cone, verified) = match cone {
            Ok(x) => x,
            Err(e) => {
                checks.run(format!("les/{}", kind.id()), || Err(e));
                continue;
            }
        };
        checks.run(format!("chain_map/{}", kind.id()), || Ok(Outcome::verified(verified, cone.map.name())));
        checks.run(format!("les/{}", kind.id()), || les_check(&cone, top));
        checks.run(format!("relative_betti/{}", kind.id()), || {
            let betti = betti_numbers(&cone.cone);
            let detail = format!("betti H_n(f), n ≤ {}: {betti:?}", cone.cone.cutoff() - 1);
            Ok(if identity { Outcome::check(betti.iter().all(|&b| b == 0), detail) } else { Outcome::Report(detail) })
        });
    }
    let control = !nilpotent;
    let i_cone = || -> Result<ChainMapRep> {
        let hh = mapping_cone(&chh_map(f, sa, sb, top + 1, top + 2)?)?;
        let hc = mapping_cone(&clambda_map(f, sa, sb, top + 1, top + 2)?)?;
        cone_map(&hh, &hc, &proj_i(sa, top + 1)?, &proj_i(sb, top + 2)?)
    };
    for n in 0..=top {
        checks.run(format!("i_surjective/{n}"), || {
            let m = i_cone()?;
            let betti = betti_numbers(m.target())[n];
            Ok(Outcome::surjective(induced_image_rank(&m, n)?, betti, control))
        });
    }
    let r = 2.min(top);
    let size = ctx.config.matrix_size;
    let gl_maps = || -> Result<(ChainMapRep, ChainMapRep)> {
        let g = f.matrix_lift(size)?;
        let (ga, gb) = (ctx.set_from(g.source().clone()), ctx.set_from(g.target().clone()));
        let src = mapping_cone(&cl_map(&g, &ga, &gb, r, r + 1)?)?;
        let hh = mapping_cone(&chh_map(f, sa, sb, r, r + 1)?)?;
        let hc = mapping_cone(&clambda_map(f, sa, sb, r, r + 1)?)?;
        let tp = cone_map(&src, &hh, &trace_phi_between(&ga, sa, r, r)?, &trace_phi_between(&gb, sb, r + 1, r + 1)?)?;
        let i = cone_map(&hh, &hc, &proj_i(sa, r)?, &proj_i(sb, r + 1)?)?;
        let itp = i.compose(&tp)?;
        Ok((tp, itp))
    };
    let maps = match gl_maps() {
        Ok(m) => m,
        Err(e) => {
            checks.run("relative_trace_phi", || Err(e));
            return;
        }
    };
    checks.run("chain_map/relative_trace_phi", || {
        Ok(Outcome::verified(maps.0.verify().and(maps.1.verify()), format!("N = {size}, degrees ≤ {}", r + 1)))
    });
    for n in 0..=r {
        checks.run(format!("relative_trace_phi_surjective/{n}"), || {
            let betti = betti_numbers(maps.0.target())[n];
            Ok(Outcome::surjective(induced_image_rank(&maps.0, n + 1)?, betti, control))
        });
        checks.run(format!("i_trace_phi_surjective/{n}"), || {
            let betti = betti_numbers(maps.1.target())[n];
            Ok(Outcome::surjective(induced_image_rank(&maps.1, n + 1)?, betti, control))
        });
    }
}

/// Exactness of `H_{top+1}(f) -> H_top(C) -> H_top(C') -> H_top(f) -> .. -> H_0(f) -> 0`.
fn les_check(mc: &MappingCone, top: usize) -> Result<super::checks::Outcome> {
    let (c, c2) = (mc.map.source(), mc.map.target());
    let hc: Vec<HomologyData> = (0..=top).map(|n| homology(c, n)).collect::<Result<_>>()?;
    let hc2: Vec<HomologyData> = (0..=top).map(|n| homology(c2, n)).collect::<Result<_>>()?;
    let hm: Vec<HomologyData> = (0..=top + 1).map(|n| homology(&mc.cone, n)).collect::<Result<_>>()?;
    let mut maps = vec![induced_map_with(&mc.proj, &hm[top + 1], &hc[top])?];
    let mut labels = Vec::new();
    for n in (0..=top).rev() {
        maps.push(induced_map_with(&mc.map, &hc[n], &hc2[n])?);
        maps.push(induced_map_with(&mc.incl, &hc2[n], &hm[n])?);
        labels.push(format!("H_{n}(C)"));
        labels.push(format!("H_{n}(C')"));
        labels.push(format!("H_{n}(f)"));
        if n > 0 {
            maps.push(induced_map_with(&mc.proj, &hm[n], &hc[n - 1])?);
        }
    }
    maps.push(SparseMatrix::zeros(0, hm[0].betti));
    let report = exactness_check(&maps, &labels)?;
    let dims: Vec<String> = report.nodes.iter().map(|n| format!("{}={}", n.label, n.dim)).collect();
    if report.exact {
        Ok(Outcome::Pass(format!("exact at {} nodes through degree {top}: {}", report.nodes.len(), dims.join(", "))))
    } else {
        let bad: Vec<&str> = report.nodes.iter().filter(|n| !n.exact).map(|n| n.label.as_str()).collect();
        Ok(Outcome::Fail(format!("not exact at {}", bad.join(", ")), None))
    }
}
