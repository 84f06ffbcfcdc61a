use super::checks::{fan_out, Checks, Outcome};
use super::matrices::{gl_over, top_degree};
use super::Context;
use crate::chain_maps::{bar_iota, bar_pi, trace_phi_between, ComplexSet};
use crate::complexes::ComplexKind;
use crate::linhom::{betti_numbers, induced_image_rank, ChainMapRep};

pub(crate) fn suite_groupring(ctx: &Context<'_>) -> Vec<Checks> {
    fan_out(ctx, |spec, checks| match ctx.load(spec) {
        Ok(set) if set.algebra().group().is_none() => {
            checks.run("group", || Ok(Outcome::Skip("not a group algebra".into())))
        }
        Ok(set) => group_checks(ctx, &set, checks),
        Err(e) => *checks = Checks::setup_failed(spec, e),
    })
}

fn group_checks(ctx: &Context<'_>, set: &ComplexSet, checks: &mut Checks) {
    let c = ctx.config.cutoff;
    checks.run("chain_map/BAR_PI_IOTA", || {
        Ok(Outcome::verified(bar_pi(set, c)?.verify().and(bar_iota(set, c)?.verify()), format!("degrees ≤ {c}")))
    });
    checks.run("pi_iota_identity", || {
        let round = bar_pi(set, c)?.compose(&bar_iota(set, c)?)?;
        let id = ChainMapRep::identity(set.get(ComplexKind::Bar, c)?);
        Ok(Outcome::no_difference(round.first_difference(&id)?, format!("degrees ≤ {c}")))
    });
    // H_n(BG; Q) is Q in degree 0 and zero above, by the transfer.
    checks.run("group_homology", || {
        let betti = betti_numbers(&*set.get(ComplexKind::Bar, c)?);
        let ok = betti.iter().enumerate().all(|(n, &b)| b == usize::from(n == 0));
        Ok(Outcome::check(ok, format!("betti H_n(BG), n < {c}: {betti:?}")))
    });
    checks.run("retract", || {
        let iota = bar_iota(set, c)?;
        let pi = bar_pi(set, c)?;
        let bar = betti_numbers(&*set.get(ComplexKind::Bar, c)?);
        let hh = betti_numbers(&*set.get(ComplexKind::Chh, c)?);
        for n in 0..c {
            let (ri, rp) = (induced_image_rank(&iota, n)?, induced_image_rank(&pi, n)?);
            if ri != bar[n] || rp != bar[n] || hh[n] < bar[n] {
                return Ok(Outcome::Fail(
                    format!("degree {n}: rank ι_* {ri}, rank π_* {rp}, H_n(BG) {}, HH_n {}", bar[n], hh[n]),
                    None,
                ));
            }
        }
        Ok(Outcome::Pass(format!("H_n(BG) {:?} splits off HH_n {hh:?}", bar)))
    });
    let size = ctx.config.matrix_size;
    for n in 0..=top_degree(ctx) {
        checks.run(format!("pi_trace_phi_surjective/{n}"), || {
            let betti = betti_numbers(&*set.get(ComplexKind::Bar, n + 1)?)[n];
            if betti == 0 {
                return Ok(Outcome::Pass(format!("target H_{n}(BG; Q) is zero")));
            }
            let gl = gl_over(ctx, set)?;
            let f = bar_pi(set, n + 1)?.compose(&trace_phi_between(&gl, set, n + 1, n + 1)?)?;
            let r = induced_image_rank(&f, n + 1)?;
            Ok(Outcome::check(r == betti, format!("image rank {r}, target betti {betti}, N = {size}")))
        });
    }
}
