//! Chain maps between the complexes of [`crate::complexes`] as explicit
//! matrices, plus the plain per-degree maps `lift_P` and `Θ_NF`.

mod functorial;
mod group;
mod lie;
mod matrix;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::complexes::{assemble_with, builder, ComplexKind, Limits};
use crate::error::{Error, Result};
use crate::linhom::cache::MatrixCache;
use crate::linhom::{ChainComplex, SparseMatrix, SparseVec};

pub use functorial::{chh_map, cl_map, clambda_map, tensor_power};
pub use group::{bar_iota, bar_pi};
pub use lie::{epsilon, kahler_maps, phi, phi_with, proj_adjoint, proj_i, proj_lie, theta, KahlerMaps};
pub use matrix::{
    corner, embed_cy, lift_p, theta_nf_lift_p, theta_nf_matrix, trace, trace_phi, trace_phi_between, trace_phi_lift_p,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MapKind {
    Phi,
    Theta,
    Epsilon,
    ProjLie,
    ProjAdj,
    ProjI,
    PKahler,
    Trace,
    Corner,
    LiftP,
    ThetaNf,
    BarPi,
    BarIota,
    EmbedCy,
}

impl MapKind {
    pub const ALL: [MapKind; 14] = [
        MapKind::Phi,
        MapKind::Theta,
        MapKind::Epsilon,
        MapKind::ProjLie,
        MapKind::ProjAdj,
        MapKind::ProjI,
        MapKind::PKahler,
        MapKind::Trace,
        MapKind::Corner,
        MapKind::LiftP,
        MapKind::ThetaNf,
        MapKind::BarPi,
        MapKind::BarIota,
        MapKind::EmbedCy,
    ];

    pub fn id(self) -> &'static str {
        match self {
            MapKind::Phi => "PHI",
            MapKind::Theta => "THETA",
            MapKind::Epsilon => "EPSILON",
            MapKind::ProjLie => "PROJ_LIE",
            MapKind::ProjAdj => "PROJ_ADJ",
            MapKind::ProjI => "PROJ_I",
            MapKind::PKahler => "P_KAHLER",
            MapKind::Trace => "TRACE",
            MapKind::Corner => "CORNER",
            MapKind::LiftP => "LIFT_P",
            MapKind::ThetaNf => "THETA_NF",
            MapKind::BarPi => "BAR_PI",
            MapKind::BarIota => "BAR_IOTA",
            MapKind::EmbedCy => "EMBED_CY",
        }
    }

    /// Source and target, as text; `gl` marks `gl_N(A)`.
    pub fn signature(self) -> &'static str {
        match self {
            MapKind::Phi => "CL_{n+1} -> CHH_n",
            MapKind::Theta => "CE_{n+1} -> CLAMBDA_n",
            MapKind::Epsilon => "CE_ADJ_n -> CHH_n",
            MapKind::ProjLie => "CL_n -> CE_n",
            MapKind::ProjAdj => "CL_{n+1} -> CE_ADJ_n",
            MapKind::ProjI => "CHH_n -> CLAMBDA_n",
            MapKind::PKahler => "CL_{n+1} -> Ω^n",
            MapKind::Trace => "CHH_n(gl) -> CHH_n",
            MapKind::Corner => "CHH_n -> CHH_n(gl)",
            MapKind::LiftP => "P_n -> CL_{n+1}(gl)",
            MapKind::ThetaNf => "CL_n(gl) -> L_n",
            MapKind::BarPi => "CHH_n -> BAR_n",
            MapKind::BarIota => "BAR_n -> CHH_n",
            MapKind::EmbedCy => "CHH_n -> P_n",
        }
    }

    /// Source degree minus target degree.
    pub fn shift(self) -> i64 {
        match self {
            MapKind::Phi | MapKind::Theta | MapKind::ProjAdj | MapKind::PKahler => 1,
            MapKind::LiftP => -1,
            _ => 0,
        }
    }

    /// False for the plain per-degree maps.
    pub fn is_chain_map(self) -> bool {
        !matches!(self, MapKind::LiftP | MapKind::ThetaNf)
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for MapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapKind::ALL
            .into_iter()
            .find(|k| k.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown map kind `{s}`")))
    }
}

/// The complexes of one algebra, built on demand and shared, optionally
/// backed by an on-disk boundary cache.
pub struct ComplexSet {
    algebra: Arc<Algebra>,
    limits: Limits,
    cache: Option<Arc<MatrixCache>>,
    hash: String,
    built: Mutex<HashMap<(ComplexKind, usize), Arc<ChainComplex>>>,
}

impl ComplexSet {
    pub fn new(algebra: Arc<Algebra>, limits: Limits) -> Self {
        let hash = algebra.content_hash();
        Self { algebra, limits, cache: None, hash, built: Mutex::new(HashMap::new()) }
    }

    pub fn with_cache(mut self, cache: Arc<MatrixCache>) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// `kind` over the algebra, degrees `0..=cutoff`.
    pub fn get(&self, kind: ComplexKind, cutoff: usize) -> Result<Arc<ChainComplex>> {
        if let Some(c) = self.built.lock().expect("not poisoned").get(&(kind, cutoff)) {
            return Ok(c.clone());
        }
        let b = builder(kind, &self.algebra, cutoff, self.limits)?;
        let c = assemble_with(b.as_ref(), cutoff, self.limits, |n, build| match &self.cache {
            Some(cache) => cache.get_or_build(&self.hash, kind.id(), n, || Ok(build())),
            None => Ok(build()),
        })?;
        let c = Arc::new(c);
        self.built.lock().expect("not poisoned").insert((kind, cutoff), c.clone());
        Ok(c)
    }
}

/// Matrix with the given column function, columns computed in parallel.
pub(crate) fn matrix_from_columns(rows: usize, cols: usize, f: impl Fn(usize) -> SparseVec + Sync) -> SparseMatrix {
    let cols: Vec<SparseVec> = (0..cols).into_par_iter().map(&f).collect();
    SparseMatrix::from_columns(rows, cols)
}

/// `S_k` with signs, as `(images, sign)`, lexicographic.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    crate::complexes::symmetric_group(k).into_iter().map(|p| (p.images().to_vec(), p.sign())).collect()
}

#[cfg(test)]
mod tests;
