use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::manifest::{input_hash, write_output, RunManifest};
use super::{ComputeArgs, EXIT_FAILED, EXIT_OK};
use crate::algebra::io::load_algebra;
use crate::algebra::{builtin_from_spec, matrix_algebra};
use crate::chain_maps::{
    bar_iota, bar_pi, corner, embed_cy, epsilon, kahler_maps, lift_p, phi, proj_adjoint, proj_i, proj_lie, theta,
    theta_nf_matrix, trace, ComplexSet, MapKind,
};
use crate::complexes::{ComplexKind, Limits};
use crate::error::{Error, Result};
use crate::linhom::{betti_numbers, induced_image_rank, rank, ChainComplex, ChainMapRep, SparseMatrix, Witness};

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub degree: usize,
    pub dim: usize,
    pub boundary_rank: usize,
    /// For the top degree, the dimension of the cycles.
    pub betti: usize,
    pub status: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexTable {
    pub kind: String,
    pub homology: String,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RankRow {
    pub source_degree: usize,
    pub target_degree: usize,
    pub rank: usize,
    /// Betti number of the target, when that degree is complete.
    pub target_betti: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MapTable {
    pub kind: String,
    pub signature: String,
    /// `None` for the plain per-degree maps.
    pub chain_map: Option<bool>,
    pub witness: Option<Witness>,
    /// Induced ranks for chain maps, matrix ranks for plain maps.
    pub ranks: Vec<RankRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComputeReport {
    pub algebra: String,
    pub dim: usize,
    pub content_hash: String,
    pub max_degree: usize,
    pub matrix_size: usize,
    pub complexes: Vec<ComplexTable>,
    pub maps: Vec<MapTable>,
}

impl ComputeReport {
    pub fn passed(&self) -> bool {
        self.maps.iter().all(|m| m.chain_map != Some(false))
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} (dim {}), degrees ≤ {}\n", self.algebra, self.dim, self.max_degree);
        for t in &self.complexes {
            let _ = writeln!(out, "## {} ({})\n", t.kind, t.homology);
            let _ = writeln!(out, "| n | dim | rank ∂_n | betti | |");
            let _ = writeln!(out, "|---|---|---|---|---|");
            for r in &t.rows {
                let note = if r.status == "complete" { "" } else { r.status };
                let _ = writeln!(out, "| {} | {} | {} | {} | {} |", r.degree, r.dim, r.boundary_rank, r.betti, note);
            }
            out.push('\n');
        }
        for m in &self.maps {
            let verdict = match m.chain_map {
                Some(true) => "chain map",
                Some(false) => "NOT a chain map",
                None => "per-degree map",
            };
            let _ = writeln!(out, "## {} ({}): {verdict}\n", m.kind, m.signature);
            if let Some(w) = &m.witness {
                let _ = writeln!(out, "witness: {w}\n");
            }
            let _ = writeln!(out, "| source n | target n | rank | target betti |");
            let _ = writeln!(out, "|---|---|---|---|");
            for r in &m.ranks {
                let b = r.target_betti.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
                let _ = writeln!(out, "| {} | {} | {} | {b} |", r.source_degree, r.target_degree, r.rank);
            }
            out.push('\n');
        }
        out
    }
}

fn table(kind: ComplexKind, c: &ChainComplex) -> ComplexTable {
    let top = c.cutoff();
    let ranks: Vec<usize> = (0..=top).into_par_iter().map(|n| rank(c.boundary(n).expect("in range"))).collect();
    let rows = (0..=top)
        .map(|n| {
            let incoming = if n < top { ranks[n + 1] } else { 0 };
            Row {
                degree: n,
                dim: c.dim(n),
                boundary_rank: ranks[n],
                betti: c.dim(n) - ranks[n] - incoming,
                status: if n < top { "complete" } else { "boundary-incomplete" },
            }
        })
        .collect();
    ComplexTable { kind: kind.id().to_string(), homology: kind.homology_name().to_string(), rows }
}

enum Built {
    Chain(ChainMapRep),
    Plain(Vec<(usize, usize, SparseMatrix)>),
}

fn build_map(
    kind: MapKind,
    set: &ComplexSet,
    gl: &dyn Fn() -> Result<ComplexSet>,
    m: usize,
    size: usize,
) -> Result<Built> {
    let below = m - 1;
    Ok(Built::Chain(match kind {
        MapKind::Phi => phi(set, below)?,
        MapKind::Theta => theta(set, below)?,
        MapKind::Epsilon => epsilon(set, m)?,
        MapKind::ProjLie => proj_lie(set, m)?,
        MapKind::ProjAdj => proj_adjoint(set, below)?,
        MapKind::ProjI => proj_i(set, m)?,
        MapKind::PKahler => kahler_maps(set, below)?.p,
        MapKind::Trace => trace(&gl()?, set, m)?,
        MapKind::Corner => corner(set, &gl()?, m)?,
        MapKind::BarPi => bar_pi(set, m)?,
        MapKind::BarIota => bar_iota(set, m)?,
        MapKind::EmbedCy => embed_cy(set, m)?,
        MapKind::LiftP => {
            let top = below.min(size - 1);
            let maps = (0..=top).map(|n| Ok((n, n + 1, lift_p(set.algebra(), size, n)?))).collect::<Result<_>>()?;
            return Ok(Built::Plain(maps));
        }
        MapKind::ThetaNf => {
            let g = gl()?;
            let maps = (1..=m).map(|n| Ok((n, n, theta_nf_matrix(g.algebra(), n)?))).collect::<Result<_>>()?;
            return Ok(Built::Plain(maps));
        }
    }))
}

fn map_table(kind: MapKind, built: Built) -> Result<MapTable> {
    let (chain_map, witness, ranks) = match built {
        Built::Chain(f) => {
            let verdict = f.verify();
            let betti = betti_numbers(f.target());
            let ranks = (0..=f.source().cutoff())
                .filter_map(|n| f.target_degree(n).filter(|&t| t < f.target().cutoff()).map(|t| (n, t)))
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(n, t)| {
                    Ok(RankRow {
                        source_degree: n,
                        target_degree: t,
                        rank: induced_image_rank(&f, n)?,
                        target_betti: Some(betti[t]),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            (Some(verdict.is_ok()), verdict.err(), ranks)
        }
        Built::Plain(maps) => {
            let ranks = maps
                .par_iter()
                .map(|(n, t, m)| RankRow { source_degree: *n, target_degree: *t, rank: rank(m), target_betti: None })
                .collect();
            (None, None, ranks)
        }
    };
    Ok(MapTable { kind: kind.id().to_string(), signature: kind.signature().to_string(), chain_map, witness, ranks })
}

/// Betti tables for `kinds` and induced ranks for `maps`, all within degree
/// `max_degree`.
pub fn compute_report(
    set: &ComplexSet,
    kinds: &[ComplexKind],
    maps: &[MapKind],
    max_degree: usize,
    size: usize,
) -> Result<ComputeReport> {
    if max_degree == 0 {
        return Err(Error::InvalidParameter("--max-degree must be at least 1".into()));
    }
    if size < 1 {
        return Err(Error::InvalidParameter("--matrix-size must be at least 1".into()));
    }
    let a = set.algebra();
    let complexes = kinds.iter().map(|&k| Ok(table(k, &*set.get(k, max_degree)?))).collect::<Result<Vec<_>>>()?;
    let gl = || Ok(ComplexSet::new(Arc::new(matrix_algebra(a, size)?), set.limits()));
    let maps =
        maps.iter().map(|&k| map_table(k, build_map(k, set, &gl, max_degree, size)?)).collect::<Result<Vec<_>>>()?;
    Ok(ComputeReport {
        algebra: a.name().to_string(),
        dim: a.dim(),
        content_hash: a.content_hash(),
        max_degree,
        matrix_size: size,
        complexes,
        maps,
    })
}

pub(super) fn run(args: &ComputeArgs) -> Result<i32> {
    let start = Instant::now();
    let a = Arc::new(load_algebra(&args.algebra)?);
    let cache = args.cache.open()?;
    let mut set = ComplexSet::new(a, Limits::new(args.max_dim));
    if let Some(c) = &cache {
        set = set.with_cache(c.clone());
    }
    let kinds =
        if args.complex.is_empty() && args.maps.is_empty() { vec![ComplexKind::Cl] } else { args.complex.clone() };
    let report = compute_report(&set, &kinds, &args.maps, args.max_degree, args.matrix_size)?;
    let md = report.to_markdown();
    let config = serde_json::json!({
        "algebra": args.algebra,
        "complex": kinds.iter().map(|k| k.id()).collect::<Vec<_>>(),
        "maps": args.maps.iter().map(|k| k.id()).collect::<Vec<_>>(),
        "max_degree": args.max_degree,
        "matrix_size": args.matrix_size,
        "max_dim": args.max_dim,
    });
    let inputs = if builtin_from_spec(&args.algebra).is_ok() { None } else { input_hash(&args.algebra) };
    let mut manifest = RunManifest::new("compute", config, inputs.into_iter().collect());
    match &args.out {
        Some(dir) => {
            let mut outputs = Vec::new();
            write_output(dir, "report.json", &serde_json::to_string_pretty(&report)?, &mut outputs)?;
            write_output(dir, "report.md", &md, &mut outputs)?;
            manifest.outputs = outputs;
            manifest.record_cache(cache.as_deref());
            manifest.timing.wall_seconds = start.elapsed().as_secs_f64();
            manifest.write(dir)?;
            print!("{md}");
        }
        None => print!("{md}"),
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}
