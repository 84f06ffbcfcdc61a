//! Seeded verification suites over the built-in catalogue. Each suite
//! returns a [`SuiteReport`] listing every check with its status and, for
//! failures, a witness.

mod appendix;
mod checks;
mod core;
mod groupring;
mod matrices;
mod oracle;
mod relative;

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::builtin_from_spec;
use crate::chain_maps::ComplexSet;
use crate::complexes::Limits;
use crate::error::{Error, Result};
use crate::linhom::cache::MatrixCache;

pub use checks::{CheckResult, Status};
pub use oracle::truncated_poly_oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteId {
    Core,
    Degree0,
    Commutative,
    Matrices,
    Groupring,
    Relative,
    Appendix,
}

impl SuiteId {
    pub const ALL: [SuiteId; 7] = [
        SuiteId::Core,
        SuiteId::Degree0,
        SuiteId::Commutative,
        SuiteId::Matrices,
        SuiteId::Groupring,
        SuiteId::Relative,
        SuiteId::Appendix,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SuiteId::Core => "core",
            SuiteId::Degree0 => "degree0",
            SuiteId::Commutative => "commutative",
            SuiteId::Matrices => "matrices",
            SuiteId::Groupring => "groupring",
            SuiteId::Relative => "relative",
            SuiteId::Appendix => "appendix",
        }
    }

    /// Subjects checked when none are given: algebra specs, or morphism
    /// names for the relative suite.
    pub fn default_subjects(self) -> &'static [&'static str] {
        match self {
            SuiteId::Core | SuiteId::Degree0 => {
                &["rationals", "dual", "truncated_poly:3", "split:2", "cyclic:2", "s3", "M2(rationals)"]
            }
            SuiteId::Commutative => &["rationals", "dual", "truncated_poly:3", "split:2", "cyclic:2", "cyclic:3", "s3"],
            SuiteId::Matrices => &["rationals", "dual", "split:2", "cyclic:2"],
            SuiteId::Groupring => &["cyclic:1", "cyclic:2", "cyclic:3", "s3"],
            SuiteId::Relative => &["trunc3_to_q", "dual_to_q", "id:dual", "id:truncated_poly:3", "split2_to_q"],
            SuiteId::Appendix => &["rationals", "dual", "split:2"],
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|k| k.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: SuiteId,
    pub algebras: Vec<String>,
    pub cutoff: usize,
    pub matrix_size: usize,
    pub seed: u64,
    /// Random chains drawn per degree by the sampling checks.
    pub samples: usize,
    pub max_dim: usize,
    pub debug_break_phi: bool,
}

pub const DEFAULT_CUTOFF: usize = 4;
pub const DEFAULT_MATRIX_SIZE: usize = 3;
pub const DEFAULT_SEED: u64 = 42;

impl SuiteConfig {
    pub fn new(suite: SuiteId) -> Self {
        Self {
            suite,
            algebras: suite.default_subjects().iter().map(|s| s.to_string()).collect(),
            cutoff: DEFAULT_CUTOFF,
            matrix_size: DEFAULT_MATRIX_SIZE,
            seed: DEFAULT_SEED,
            samples: 4,
            max_dim: crate::complexes::DEFAULT_BOUND,
            debug_break_phi: false,
        }
    }

    pub fn with_subjects(mut self, subjects: &[&str]) -> Self {
        self.algebras = subjects.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.cutoff < 2 {
            return Err(Error::InvalidParameter(format!("cutoff must be at least 2, got {}", self.cutoff)));
        }
        if self.matrix_size < 2 {
            return Err(Error::InvalidParameter(format!("matrix size must be at least 2, got {}", self.matrix_size)));
        }
        Ok(())
    }

    pub fn limits(&self) -> Limits {
        Limits::new(self.max_dim)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub reported: usize,
    pub resource_bound: usize,
}

/// Result of one suite run. Serializes without timing, so equal configs
/// give byte-identical JSON; timings sit in [`SuiteReport::timing`].
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub config: SuiteConfig,
    pub environment_hash: String,
    pub summary: Summary,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    /// `(subject/check, seconds)`.
    #[serde(skip)]
    pub timing: Vec<(String, f64)>,
}

impl SuiteReport {
    fn new(config: SuiteConfig, checks: Vec<CheckResult>, timing: Vec<(String, f64)>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::Reported => summary.reported += 1,
            }
            if c.resource_bound {
                summary.resource_bound += 1;
            }
        }
        Self {
            suite: config.suite,
            environment_hash: environment_hash(&config),
            passed: summary.fail == 0,
            config,
            summary,
            checks,
            timing,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_markdown(&self) -> String {
        let c = &self.config;
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(out, "## Suite `{}`\n", self.suite);
        let _ = writeln!(
            out,
            "cutoff {}, matrix size {}, seed {}, bound {}: {} pass, {} fail, {} skipped, {} reported\n",
            c.cutoff, c.matrix_size, c.seed, c.max_dim, s.pass, s.fail, s.skipped, s.reported
        );
        let _ = writeln!(out, "| subject | check | status | detail |");
        let _ = writeln!(out, "|---|---|---|---|");
        for r in &self.checks {
            let mut detail = r.detail.replace('|', "\\|");
            if let Some(w) = &r.witness {
                let _ = write!(detail, " (witness: {})", w.to_string().replace('|', "\\|"));
            }
            let _ = writeln!(out, "| {} | {} | {} | {} |", r.subject, r.check, r.status, detail);
        }
        out
    }
}

fn environment_hash(config: &SuiteConfig) -> String {
    let mut h = Sha256::new();
    h.update(env!("CARGO_PKG_NAME"));
    h.update(env!("CARGO_PKG_VERSION"));
    h.update(std::env::consts::ARCH);
    h.update(std::env::consts::OS);
    h.update(serde_json::to_vec(config).expect("serializable"));
    hex::encode(h.finalize())
}

/// Shared inputs of one suite run.
pub(crate) struct Context<'a> {
    pub config: &'a SuiteConfig,
    pub cache: Option<Arc<MatrixCache>>,
}

impl Context<'_> {
    pub fn set_for(&self, a: crate::algebra::Algebra) -> ComplexSet {
        self.set_from(Arc::new(a))
    }

    pub fn set_from(&self, a: Arc<crate::algebra::Algebra>) -> ComplexSet {
        let set = ComplexSet::new(a, self.config.limits());
        match &self.cache {
            Some(c) => set.with_cache(c.clone()),
            None => set,
        }
    }

    pub fn load(&self, spec: &str) -> Result<ComplexSet> {
        Ok(self.set_for(builtin_from_spec(spec)?))
    }
}

/// Runs one suite; `cache`, when given, backs the boundary matrices.
pub fn run_suite(config: &SuiteConfig, cache: Option<Arc<MatrixCache>>) -> Result<SuiteReport> {
    config.validate()?;
    let ctx = Context { config, cache };
    let per_subject = match config.suite {
        SuiteId::Core => core::suite_core(&ctx),
        SuiteId::Degree0 => core::suite_degree0(&ctx),
        SuiteId::Commutative => core::suite_commutative(&ctx),
        SuiteId::Matrices => matrices::suite_matrices(&ctx),
        SuiteId::Groupring => groupring::suite_groupring(&ctx),
        SuiteId::Relative => relative::suite_relative(&ctx),
        SuiteId::Appendix => appendix::suite_appendix(&ctx),
    };
    let mut results = Vec::new();
    let mut timing = Vec::new();
    for c in per_subject {
        let (r, t) = c.finish();
        results.extend(r);
        timing.extend(t);
    }
    Ok(SuiteReport::new(config.clone(), results, timing))
}

/// Runs every suite with the shared settings of `base`.
pub fn run_all(base: &SuiteConfig, cache: Option<Arc<MatrixCache>>) -> Result<Vec<SuiteReport>> {
    SuiteId::ALL
        .into_iter()
        .map(|suite| {
            let config = SuiteConfig {
                suite,
                algebras: suite.default_subjects().iter().map(|s| s.to_string()).collect(),
                ..base.clone()
            };
            run_suite(&config, cache.clone())
        })
        .collect()
}

pub fn suite_core(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite(&SuiteConfig { suite: SuiteId::Core, ..config.clone() }, None)
}

pub fn suite_degree0(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite(&SuiteConfig { suite: SuiteId::Degree0, ..config.clone() }, None)
}

pub fn suite_commutative(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite(&SuiteConfig { suite: SuiteId::Commutative, ..config.clone() }, None)
}

pub fn suite_matrices(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite(&SuiteConfig { suite: SuiteId::Matrices, ..config.clone() }, None)
}

pub fn suite_groupring(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite(&SuiteConfig { suite: SuiteId::Groupring, ..config.clone() }, None)
}

pub fn suite_relative(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite(&SuiteConfig { suite: SuiteId::Relative, ..config.clone() }, None)
}

pub fn suite_appendix(config: &SuiteConfig) -> Result<SuiteReport> {
    run_suite(&SuiteConfig { suite: SuiteId::Appendix, ..config.clone() }, None)
}
