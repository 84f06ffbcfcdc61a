use super::checks::{fan_out, random_chain, subject_rng, Checks, Outcome};
use super::Context;
use crate::chain_maps::{epsilon, kahler_maps, phi_with, proj_adjoint, proj_i, proj_lie, theta, ComplexSet};
use crate::complexes::tensor::{decode, encode};
use crate::complexes::ComplexKind;
use crate::error::Result;
use crate::linhom::{betti_numbers, homology, induced_map, rank, ChainMapRep, SparseVec};

pub(crate) fn suite_core(ctx: &Context<'_>) -> Vec<Checks> {
    fan_out(ctx, |spec, checks| match ctx.load(spec) {
        Ok(set) => core_checks(ctx, &set, checks),
        Err(e) => *checks = Checks::setup_failed(spec, e),
    })
}

fn core_checks(ctx: &Context<'_>, set: &ComplexSet, checks: &mut Checks) {
    let c = ctx.config.cutoff;
    let broken = ctx.config.debug_break_phi;
    for kind in ComplexKind::ALL {
        checks.run(format!("boundary_squared/{}", kind.id()), || {
            if kind == ComplexKind::Bar && set.algebra().group().is_none() {
                return Ok(Outcome::Skip("not a group algebra".into()));
            }
            let cx = set.get(kind, c)?;
            Ok(Outcome::verified(cx.verify_boundary_squares(), format!("dims {:?}", cx.dims())))
        });
    }
    let phi_map = || phi_with(set, c, broken);
    let maps: [(&str, &dyn Fn() -> Result<ChainMapRep>); 6] = [
        ("PHI", &phi_map),
        ("THETA", &|| theta(set, c)),
        ("EPSILON", &|| epsilon(set, c)),
        ("PROJ_LIE", &|| proj_lie(set, c)),
        ("PROJ_ADJ", &|| proj_adjoint(set, c)),
        ("PROJ_I", &|| proj_i(set, c)),
    ];
    for (name, build) in maps {
        checks.run(format!("chain_map/{name}"), || {
            let f = build()?;
            Ok(Outcome::verified(f.verify(), format!("degrees ≤ {}", f.source().cutoff())))
        });
    }
    checks.run("identity/epsilon_proj_adj_eq_phi", || {
        let lhs = epsilon(set, c)?.compose(&proj_adjoint(set, c)?)?;
        Ok(Outcome::no_difference(lhs.first_difference(&phi_map()?)?, format!("CL_n -> CHH_(n-1), n ≤ {}", c + 1)))
    });
    checks.run("identity/i_phi_eq_theta_proj_lie", || {
        let lhs = proj_i(set, c)?.compose(&phi_map()?)?;
        let rhs = theta(set, c)?.compose(&proj_lie(set, c + 1)?)?;
        Ok(Outcome::no_difference(lhs.first_difference(&rhs)?, format!("CL_n -> CLAMBDA_(n-1), n ≤ {}", c + 1)))
    });
    let samples = ctx.config.samples;
    let subject = checks.subject().to_string();
    checks.run("sampled/phi_commutes", || {
        let f = phi_map()?;
        let (cl, chh) = (f.source(), f.target());
        let mut rng = subject_rng(ctx.config.seed, &subject, "phi");
        for n in 2..=c + 1 {
            for k in 0..samples {
                let v = random_chain(&mut rng, cl.dim(n), 6);
                let lhs = chh.boundary(n - 1)?.apply(&f.map(n).expect("in range").apply(&v));
                let rhs = f.map(n - 1).expect("in range").apply(&cl.boundary(n)?.apply(&v));
                if lhs != rhs {
                    return Ok(Outcome::Fail(
                        format!("b φ v ≠ φ d v on sample {k} in degree {n}"),
                        Some(crate::linhom::Witness { degree: n, column: k, detail: format!("v = {v}") }),
                    ));
                }
            }
        }
        Ok(Outcome::Pass(format!("{samples} samples per degree 2..={}", c + 1)))
    });
    checks.run("sampled/i_kills_rotation", || {
        let i = proj_i(set, c)?;
        let d = set.algebra().dim();
        let mut rng = subject_rng(ctx.config.seed, &subject, "rotation");
        for n in 0..=c {
            for k in 0..samples {
                let v = random_chain(&mut rng, i.source().dim(n), 6);
                let w = v.sub(&rotate(&v, n, d));
                let image = i.map(n).expect("in range").apply(&w);
                if !image.is_zero() {
                    return Ok(Outcome::Fail(
                        format!("I(v - t v) ≠ 0 on sample {k} in degree {n}"),
                        Some(crate::linhom::Witness { degree: n, column: k, detail: format!("v = {v}") }),
                    ));
                }
            }
        }
        Ok(Outcome::Pass(format!("{samples} samples per degree 0..={c}")))
    });
}

/// `t(a_0, .., a_n) = (-1)^n (a_n, a_0, .., a_{n-1})` on `CHH_n`.
fn rotate(v: &SparseVec, n: usize, d: usize) -> SparseVec {
    let sign = if n.is_multiple_of(2) { crate::linhom::q(1) } else { crate::linhom::q(-1) };
    SparseVec::from_terms(
        v.iter()
            .map(|(idx, x)| {
                let mut xs = decode(idx, n + 1, d);
                xs.rotate_right(1);
                (encode(&xs, d), x * &sign)
            })
            .collect(),
    )
}

pub(crate) fn suite_degree0(ctx: &Context<'_>) -> Vec<Checks> {
    fan_out(ctx, |spec, checks| match ctx.load(spec) {
        Ok(set) => degree0_checks(&set, checks),
        Err(e) => *checks = Checks::setup_failed(spec, e),
    })
}

fn degree0_checks(set: &ComplexSet, checks: &mut Checks) {
    checks.run("betti_equal", || {
        let hl = homology(&*set.get(ComplexKind::Cl, 2)?, 1)?.betti;
        let hh = homology(&*set.get(ComplexKind::Chh, 1)?, 0)?.betti;
        let hc = homology(&*set.get(ComplexKind::Clambda, 1)?, 0)?.betti;
        let lie = homology(&*set.get(ComplexKind::Ce, 2)?, 1)?.betti;
        Ok(Outcome::check(
            hl == hh && hh == hc && hc == lie,
            format!("HL_1 = {hl}, HH_0 = {hh}, HC_0 = {hc}, H^Lie_1 = {lie}"),
        ))
    });
    let maps: [(&str, usize, &dyn Fn() -> Result<ChainMapRep>); 4] = [
        ("PHI", 1, &|| phi_with(set, 1, false)),
        ("PROJ_LIE", 1, &|| proj_lie(set, 2)),
        ("THETA", 1, &|| theta(set, 1)),
        ("PROJ_I", 0, &|| proj_i(set, 1)),
    ];
    for (name, n, build) in maps {
        checks.run(format!("bijective/{name}"), || {
            let m = induced_map(&build()?, n)?;
            let r = rank(&m);
            Ok(Outcome::check(
                m.rows() == m.cols() && r == m.cols(),
                format!("{}x{} induced matrix of rank {r}", m.rows(), m.cols()),
            ))
        });
    }
}

pub(crate) fn suite_commutative(ctx: &Context<'_>) -> Vec<Checks> {
    fan_out(ctx, |spec, checks| match ctx.load(spec) {
        Ok(set) if !set.algebra().is_commutative() => {
            checks.run("commutative", || Ok(Outcome::Skip("algebra is not commutative".into())))
        }
        Ok(set) => commutative_checks(ctx, &set, checks),
        Err(e) => *checks = Checks::setup_failed(spec, e),
    })
}

fn commutative_checks(ctx: &Context<'_>, set: &ComplexSet, checks: &mut Checks) {
    let c = ctx.config.cutoff;
    let d = set.algebra().dim();
    checks.run("cl_boundary_zero", || {
        let cl = set.get(ComplexKind::Cl, c)?;
        let nonzero = (1..=c).find(|&n| !cl.boundary(n).expect("in range").is_zero());
        Ok(match nonzero {
            None => Outcome::Pass(format!("degrees ≤ {c}")),
            Some(n) => Outcome::Fail(format!("∂_{n} ≠ 0"), None),
        })
    });
    checks.run("betti_powers", || {
        let betti = betti_numbers(&*set.get(ComplexKind::Cl, c)?);
        let expected: Vec<usize> = (0..c).map(|n| d.pow(n as u32)).collect();
        Ok(Outcome::check(betti == expected, format!("betti {betti:?}, dim(A)^n {expected:?}")))
    });
    let km = match kahler_maps(set, c) {
        Ok(km) => km,
        Err(e) => {
            checks.run("kahler", || Err(e));
            return;
        }
    };
    checks.run("chain_map/P_KAHLER", || Ok(Outcome::verified(km.p.verify().and(km.epsilon.verify()), "p and ε_Ω")));
    checks.run("p_surjective", || {
        let dims: Vec<usize> = km.modules.iter().map(|m| m.dim()).collect();
        let ranks: Vec<usize> = (0..=c).map(|t| rank(km.p.map(t + 1).expect("in range"))).collect();
        Ok(Outcome::check(ranks == dims, format!("rank p {ranks:?}, dim Ω^n {dims:?}")))
    });
    checks.run("epsilon_p_eq_phi_mod_boundaries", || {
        let phi = phi_with(set, c, false)?;
        let diff = km.epsilon.compose(&km.p)?.sub(&phi)?;
        let chh = set.get(ComplexKind::Chh, c)?;
        for t in 0..c {
            let h = homology(&chh, t)?;
            let m = diff.map(t + 1).expect("in range");
            if let Some(col) = (0..m.cols()).find(|&j| !h.is_boundary(m.column(j))) {
                return Ok(Outcome::Fail(
                    format!("ε_Ω p - φ is not a boundary in degree {t}"),
                    Some(crate::linhom::Witness { degree: t + 1, column: col, detail: format!("{}", m.column(col)) }),
                ));
            }
        }
        Ok(Outcome::Pass(format!("target degrees < {c}")))
    });
    checks.run("phi_onto_hh", || {
        let phi = phi_with(set, c, false)?;
        let hh = betti_numbers(&*set.get(ComplexKind::Chh, c)?);
        let ranks = (0..c).map(|t| crate::linhom::induced_image_rank(&phi, t + 1)).collect::<Result<Vec<_>>>()?;
        let onto = ranks.iter().zip(&hh).all(|(r, b)| r == b);
        Ok(Outcome::Report(format!("φ_* ranks {ranks:?}, HH betti {hh:?}: {}", if onto { "onto" } else { "not onto" })))
    });
}
