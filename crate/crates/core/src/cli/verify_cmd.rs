use std::time::Instant;

use super::manifest::{write_output, RunManifest};
use super::{VerifyArgs, EXIT_FAILED, EXIT_OK};
use crate::error::{Error, Result};
use crate::verify::{run_all, run_suite, Status, SuiteConfig, SuiteId, SuiteReport};

pub(super) fn run(args: &VerifyArgs) -> Result<i32> {
    let start = Instant::now();
    let cache = args.cache.open()?;
    let all = args.suite.eq_ignore_ascii_case("all");
    let suite = if all { SuiteId::Core } else { args.suite.parse()? };
    let mut config = SuiteConfig {
        cutoff: args.cutoff,
        matrix_size: args.matrix_size,
        seed: args.seed,
        samples: args.samples,
        max_dim: args.max_dim,
        debug_break_phi: args.debug_break_phi,
        ..SuiteConfig::new(suite)
    };
    if !args.algebras.is_empty() {
        if all {
            return Err(Error::InvalidParameter("--algebra needs a single --suite".into()));
        }
        config.algebras = args.algebras.clone();
    }
    let reports = if all { run_all(&config, cache.clone())? } else { vec![run_suite(&config, cache.clone())?] };

    let mut manifest = RunManifest::new(
        "verify",
        serde_json::json!({
            "suite": args.suite,
            "cutoff": args.cutoff,
            "matrix_size": args.matrix_size,
            "seed": args.seed,
            "samples": args.samples,
            "max_dim": args.max_dim,
            "algebras": args.algebras,
            "debug_break_phi": args.debug_break_phi,
        }),
        Vec::new(),
    );
    for r in &reports {
        for (k, t) in &r.timing {
            manifest.timing.checks.insert(format!("{}/{k}", r.suite), *t);
        }
    }
    if let Some(dir) = &args.out {
        let mut outputs = Vec::new();
        for r in &reports {
            write_output(dir, &format!("{}.json", r.suite), &r.to_json(), &mut outputs)?;
            write_output(dir, &format!("{}.md", r.suite), &r.to_markdown(), &mut outputs)?;
        }
        manifest.outputs = outputs;
        manifest.record_cache(cache.as_deref());
        manifest.timing.wall_seconds = start.elapsed().as_secs_f64();
        manifest.write(dir)?;
    }
    print!("{}", summary(&reports));
    Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_FAILED })
}

fn summary(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let s = &r.summary;
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} skipped, {} reported\n",
            r.suite, s.pass, s.fail, s.skipped, s.reported
        ));
        for c in r.checks.iter().filter(|c| c.status == Status::Fail || c.resource_bound) {
            out.push_str(&format!("  {} {}/{}: {}\n", c.status, c.subject, c.check, c.detail));
            if let Some(w) = &c.witness {
                out.push_str(&format!("    witness: {w}\n"));
            }
        }
    }
    out
}
