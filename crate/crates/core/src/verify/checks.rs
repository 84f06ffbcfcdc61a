use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linhom::{q, SparseVec, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Informational only, never a failure.
    Reported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Reported => "reported",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub subject: String,
    pub check: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub resource_bound: bool,
}

pub(crate) enum Outcome {
    Pass(String),
    Fail(String, Option<Witness>),
    Skip(String),
    Report(String),
}

impl Outcome {
    pub fn check(ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Outcome::Pass(detail.into())
        } else {
            Outcome::Fail(detail.into(), None)
        }
    }

    pub fn verified(r: std::result::Result<(), Witness>, detail: impl Into<String>) -> Self {
        match r {
            Ok(()) => Outcome::Pass(detail.into()),
            Err(w) => Outcome::Fail(detail.into(), Some(w)),
        }
    }

    /// Pass when `other` is `None`, else fail on its witness.
    pub fn no_difference(diff: Option<Witness>, detail: impl Into<String>) -> Self {
        match diff {
            None => Outcome::Pass(detail.into()),
            Some(w) => Outcome::Fail(detail.into(), Some(w)),
        }
    }

    /// Rank of an induced map against the target betti number; `report` turns
    /// the comparison into a plain report.
    pub fn surjective(rank: usize, betti: usize, report: bool) -> Self {
        let detail = format!("image rank {rank}, target betti {betti}");
        match (report, rank == betti) {
            (true, true) => Outcome::Report(format!("{detail}: onto")),
            (true, false) => Outcome::Report(format!("{detail}: not onto")),
            (false, ok) => Outcome::check(ok, detail),
        }
    }
}

/// Checks on one subject, run in order.
pub(crate) struct Checks {
    subject: String,
    results: Vec<CheckResult>,
    timing: Vec<(String, f64)>,
}

impl Checks {
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), results: Vec::new(), timing: Vec::new() }
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    pub fn run(&mut self, check: impl Into<String>, f: impl FnOnce() -> Result<Outcome>) {
        let check = check.into();
        let start = Instant::now();
        let outcome = f();
        self.timing.push((format!("{}/{check}", self.subject), start.elapsed().as_secs_f64()));
        let mut resource_bound = false;
        let (status, detail, witness) = match outcome {
            Ok(Outcome::Pass(d)) => (Status::Pass, d, None),
            Ok(Outcome::Fail(d, w)) => (Status::Fail, d, w),
            Ok(Outcome::Skip(d)) => (Status::Skipped, d, None),
            Ok(Outcome::Report(d)) => (Status::Reported, d, None),
            Err(e @ Error::ResourceBound { .. }) => {
                resource_bound = true;
                (Status::Skipped, e.to_string(), None)
            }
            Err(e) => (Status::Fail, format!("error: {e}"), None),
        };
        self.results.push(CheckResult {
            subject: self.subject.clone(),
            check,
            status,
            detail,
            witness,
            resource_bound,
        });
    }

    /// Records a failure to set up the subject at all.
    pub fn setup_failed(subject: &str, e: Error) -> Self {
        let mut c = Checks::new(subject);
        c.run("setup", || Err(e));
        c
    }

    pub fn finish(self) -> (Vec<CheckResult>, Vec<(String, f64)>) {
        (self.results, self.timing)
    }
}

/// Generator for one subject, independent of scheduling order.
pub(crate) fn subject_rng(seed: u64, subject: &str, check: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(subject.as_bytes());
    h.update([0]);
    h.update(check.as_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

/// Chain with up to `terms` coordinates drawn from `[-3, 3]`.
pub(crate) fn random_chain(rng: &mut impl Rng, dim: usize, terms: usize) -> SparseVec {
    if dim == 0 {
        return SparseVec::new();
    }
    SparseVec::from_terms((0..terms).map(|_| (rng.random_range(0..dim), q(rng.random_range(-3..=3)))).collect())
}

/// Runs `f` for every configured subject in parallel, results in subject
/// order.
pub(crate) fn fan_out(ctx: &super::Context<'_>, f: impl Fn(&str, &mut Checks) + Sync) -> Vec<Checks> {
    use rayon::prelude::*;
    ctx.config
        .algebras
        .par_iter()
        .map(|s| {
            let mut c = Checks::new(s.as_str());
            f(s, &mut c);
            c
        })
        .collect()
}
