use std::sync::Arc;

use super::checks::{fan_out, Checks, Outcome};
use super::Context;
use crate::algebra::matrix_algebra;
use crate::chain_maps::{corner, trace, trace_phi_between, trace_phi_lift_p, ComplexSet};
use crate::complexes::tensor::{decode, power};
use crate::complexes::{ComplexKind, PBuilder, Permutation};
use crate::error::Result;
use crate::linhom::{betti_numbers, homology, induced_image_rank, SparseVec};

pub(crate) fn suite_matrices(ctx: &Context<'_>) -> Vec<Checks> {
    fan_out(ctx, |spec, checks| {
        let setup = || -> Result<(ComplexSet, ComplexSet)> {
            let base = ctx.load(spec)?;
            let gl = ctx.set_for(matrix_algebra(base.algebra(), ctx.config.matrix_size)?);
            Ok((base, gl))
        };
        match setup() {
            Ok((base, gl)) => matrix_checks(ctx, &base, &gl, checks),
            Err(e) => *checks = Checks::setup_failed(spec, e),
        }
    })
}

/// Highest Hochschild degree tested for surjectivity.
pub(crate) fn top_degree(ctx: &Context<'_>) -> usize {
    2.min(ctx.config.cutoff - 1)
}

fn matrix_checks(ctx: &Context<'_>, base: &ComplexSet, gl: &ComplexSet, checks: &mut Checks) {
    let size = ctx.config.matrix_size;
    let top = top_degree(ctx);
    let a = base.algebra();
    if a.dim() == 1 && a.matrix_meta().is_none() {
        checks.run(format!("hl_gl{size}_rationals"), || {
            let c = ctx.config.cutoff;
            let betti = betti_numbers(&*gl.get(ComplexKind::Cl, c)?);
            Ok(Outcome::check(betti.iter().all(|&b| b == 1), format!("betti HL_n(gl_{size}), n < {c}: {betti:?}")))
        });
    }
    checks.run("chain_map/TRACE_CORNER", || {
        let tr = trace(gl, base, top)?;
        let co = corner(base, gl, top)?;
        Ok(Outcome::verified(tr.verify().and(co.verify()), format!("degrees ≤ {top}")))
    });
    checks.run("trace_corner_identity", || {
        let round = trace(gl, base, top)?.compose(&corner(base, gl, top)?)?;
        let chh = base.get(ComplexKind::Chh, top + 1)?;
        for n in 0..=top {
            let m = round.map(n).expect("in range");
            if let Some(col) = (0..m.cols()).find(|&j| *m.column(j) != SparseVec::unit(j)) {
                return Ok(Outcome::Fail(
                    format!("tr ∘ corner ≠ id in degree {n}"),
                    Some(crate::linhom::Witness { degree: n, column: col, detail: format!("{}", m.column(col)) }),
                ));
            }
            let h = homology(&chh, n)?;
            for (k, z) in h.representatives.iter().enumerate() {
                if h.class_of(&m.apply(z)) != Some(SparseVec::unit(k)) {
                    return Ok(Outcome::Fail(format!("induced map not the identity on HH_{n}"), None));
                }
            }
        }
        Ok(Outcome::Pass(format!("chain level and on HH_n, n ≤ {top}")))
    });
    checks.run("chain_map/TRACE_PHI", || {
        let f = trace_phi_between(gl, base, top + 1, top + 1)?;
        Ok(Outcome::verified(f.verify(), format!("CL_(n+1)(gl_{size}) -> CHH_n, n ≤ {top}")))
    });
    for n in 0..=top {
        checks.run(format!("trace_phi_surjective/{n}"), || {
            let f = trace_phi_between(gl, base, top + 1, top + 1)?;
            let betti = betti_numbers(&*base.get(ComplexKind::Chh, top + 1)?);
            Ok(Outcome::surjective(induced_image_rank(&f, n + 1)?, betti[n], false))
        });
    }
    checks.run("tau_identity", || {
        let d = a.dim();
        let top_tau = (size - 1).min(ctx.config.cutoff);
        for n in 1..=top_tau {
            let m = trace_phi_lift_p(a, size, n)?;
            let p = PBuilder::new(a.clone(), n);
            let tau = Permutation::cyclic_shift(n + 1);
            let count = usize::try_from(power(d, n + 1)).expect("small");
            for t in 0..count {
                let col = p.index(n, &tau, &decode(t, n + 1, d)).expect("τ is cyclic");
                if *m.column(col) != SparseVec::unit(t) {
                    return Ok(Outcome::Fail(
                        format!("tr φ lift(τ_{} ⊗ a) ≠ a", n + 1),
                        Some(crate::linhom::Witness { degree: n, column: col, detail: format!("{}", m.column(col)) }),
                    ));
                }
            }
        }
        Ok(Outcome::Pass(format!("τ-chains with up to {} factors, N = {size}", top_tau + 1)))
    });
}

pub(crate) fn gl_over(ctx: &Context<'_>, base: &ComplexSet) -> Result<ComplexSet> {
    Ok(ctx.set_from(Arc::new(matrix_algebra(base.algebra(), ctx.config.matrix_size)?)))
}
