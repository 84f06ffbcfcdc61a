//! Acceptance criteria, one PASS/FAIL line each. Exact arithmetic throughout.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use leibniz::algebra::builtin_from_spec;
use leibniz::chain_maps::{epsilon, phi, proj_adjoint, proj_i, proj_lie, theta, ComplexSet};
use leibniz::complexes::{ComplexKind, Limits};
use leibniz::linhom::{betti_numbers, homology, induced_map, rank, SparseMatrix};
use leibniz::verify::{run_suite, truncated_poly_oracle, Status, SuiteConfig, SuiteId, SuiteReport};

const BOUND: usize = 1_000_000;
const CUTOFF: usize = 4;
const BUILTINS: [&str; 8] =
    ["rationals", "dual", "truncated_poly:3", "split:2", "cyclic:2", "cyclic:3", "s3", "M2(rationals)"];

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Self { ok, detail: detail.into() }
    }
}

fn set(spec: &str) -> ComplexSet {
    ComplexSet::new(Arc::new(builtin_from_spec(spec).unwrap()), Limits::new(BOUND))
}

fn config(suite: SuiteId, subjects: &[&str]) -> SuiteConfig {
    let mut c = SuiteConfig::new(suite).with_subjects(subjects);
    c.max_dim = BOUND;
    c
}

/// Every listed `(subject, check)` present and passing.
fn require(report: &SuiteReport, wanted: &[(&str, String)]) -> Vec<String> {
    let mut bad = Vec::new();
    for (subject, check) in wanted {
        match report.checks.iter().find(|c| c.subject == *subject && c.check == *check) {
            Some(c) if c.status == Status::Pass => {}
            Some(c) => bad.push(format!("{subject}/{check}: {:?} {}", c.status, c.detail)),
            None => bad.push(format!("{subject}/{check}: missing")),
        }
    }
    bad.extend(report.failures().map(|c| format!("{}/{}: {}", c.subject, c.check, c.detail)));
    bad
}

fn summarize(bad: Vec<String>, ok_detail: String) -> Outcome {
    if bad.is_empty() {
        Outcome::new(true, ok_detail)
    } else {
        Outcome::new(false, bad.join("; "))
    }
}

fn boundary_soundness() -> Outcome {
    let start = Instant::now();
    let mut cases: Vec<(&str, usize)> = BUILTINS.iter().map(|s| (*s, CUTOFF)).collect();
    cases.push(("M2(dual)", 3));
    let mut bad = Vec::new();
    let mut count = 0;
    for (spec, cutoff) in cases {
        let s = set(spec);
        for kind in ComplexKind::ALL {
            if kind == ComplexKind::Bar && s.algebra().group().is_none() {
                continue;
            }
            match s.get(kind, cutoff) {
                Ok(c) if c.verify_boundary_squares().is_ok() => count += 1,
                Ok(_) => bad.push(format!("{spec} {kind}: ∂² ≠ 0")),
                Err(e) => bad.push(format!("{spec} {kind}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        bad.push(format!("took {elapsed:?}"));
    }
    summarize(bad, format!("{count} complexes, {:.1}s", elapsed.as_secs_f64()))
}

fn phi_chain_map() -> Outcome {
    let mut bad = Vec::new();
    for spec in BUILTINS {
        match phi(&set(spec), CUTOFF) {
            Ok(f) if f.verify().is_ok() => {}
            Ok(f) => bad.push(format!("{spec}: {:?}", f.verify().unwrap_err())),
            Err(e) => bad.push(format!("{spec}: {e}")),
        }
    }
    summarize(bad, format!("{} algebras, target degrees ≤ {CUTOFF}", BUILTINS.len()))
}

fn chain_level_diagrams() -> Outcome {
    let mut bad = Vec::new();
    for spec in BUILTINS {
        let s = set(spec);
        let c = CUTOFF - 1;
        let check = || -> leibniz::Result<(bool, bool)> {
            let f = phi(&s, c)?;
            let lhs = epsilon(&s, c)?.compose(&proj_adjoint(&s, c)?)?;
            let left = lhs.first_difference(&f)?.is_none();
            let lhs = proj_i(&s, c)?.compose(&f)?;
            let rhs = theta(&s, c)?.compose(&proj_lie(&s, c + 1)?)?;
            Ok((left, lhs.first_difference(&rhs)?.is_none()))
        };
        match check() {
            Ok((true, true)) => {}
            Ok((a, b)) => bad.push(format!("{spec}: ε∘proj_adj = φ {a}, I∘φ = θ∘proj_lie {b}")),
            Err(e) => bad.push(format!("{spec}: {e}")),
        }
    }
    summarize(bad, format!("{} algebras, source degrees ≤ {CUTOFF}", BUILTINS.len()))
}

/// `dim A/[A, A]` straight from the structure constants.
fn commutator_quotient_dim(spec: &str) -> usize {
    let a = builtin_from_spec(spec).unwrap();
    let d = a.dim();
    let cols = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| a.bracket_basis(i, j)).collect();
    d - rank(&SparseMatrix::from_columns(d, cols))
}

fn degree_zero() -> Outcome {
    let mut bad = Vec::new();
    let mut seen = BTreeMap::new();
    for spec in BUILTINS {
        let s = set(spec);
        let oracle = commutator_quotient_dim(spec);
        let run = || -> leibniz::Result<Vec<String>> {
            let mut bad = Vec::new();
            let bettis = [
                ("HL_1", homology(&*s.get(ComplexKind::Cl, 2)?, 1)?.betti),
                ("HH_0", homology(&*s.get(ComplexKind::Chh, 1)?, 0)?.betti),
                ("HC_0", homology(&*s.get(ComplexKind::Clambda, 1)?, 0)?.betti),
                ("H^Lie_1", homology(&*s.get(ComplexKind::Ce, 2)?, 1)?.betti),
            ];
            for (name, b) in bettis {
                if b != oracle {
                    bad.push(format!("{spec}: {name} = {b}, dim A/[A,A] = {oracle}"));
                }
            }
            let maps = [
                ("φ", induced_map(&phi(&s, 1)?, 1)?),
                ("proj_lie", induced_map(&proj_lie(&s, 2)?, 1)?),
                ("θ", induced_map(&theta(&s, 1)?, 1)?),
                ("I", induced_map(&proj_i(&s, 1)?, 0)?),
            ];
            for (name, m) in maps {
                if m.rows() != oracle || m.cols() != oracle || rank(&m) != oracle {
                    bad.push(format!("{spec}: {name}_* is {}x{} of rank {}", m.rows(), m.cols(), rank(&m)));
                }
            }
            Ok(bad)
        };
        match run() {
            Ok(b) => bad.extend(b),
            Err(e) => bad.push(format!("{spec}: {e}")),
        }
        seen.insert(spec, oracle);
    }
    summarize(bad, format!("dims {seen:?}"))
}

fn commutative_powers() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for spec in BUILTINS {
        let s = set(spec);
        if !s.algebra().is_commutative() {
            continue;
        }
        count += 1;
        let d = s.algebra().dim();
        let cl = s.get(ComplexKind::Cl, CUTOFF).unwrap();
        if (1..=CUTOFF).any(|n| !cl.boundary(n).unwrap().is_zero()) {
            bad.push(format!("{spec}: nonzero CL boundary"));
        }
        let betti = betti_numbers(&cl);
        let expected: Vec<usize> = (0..=3).map(|n| d.pow(n)).collect();
        if betti[..=3] != expected[..] {
            bad.push(format!("{spec}: betti {betti:?}, expected {expected:?}"));
        }
    }
    summarize(bad, format!("{count} commutative algebras, n ≤ 3"))
}

fn morita() -> Outcome {
    let start = Instant::now();
    let subjects = ["dual", "split:2", "cyclic:2"];
    let report = run_suite(&config(SuiteId::Matrices, &subjects), None).unwrap();
    let mut wanted = Vec::new();
    for s in subjects {
        wanted.push((s, "trace_corner_identity".to_string()));
        wanted.push((s, "chain_map/TRACE_PHI".to_string()));
        wanted.extend((0..=2).map(|n| (s, format!("trace_phi_surjective/{n}"))));
    }
    let mut bad = require(&report, &wanted);
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(600) {
        bad.push(format!("took {elapsed:?}"));
    }
    summarize(bad, format!("N = 3, n ≤ 2, {} checks, {:.1}s", wanted.len(), elapsed.as_secs_f64()))
}

fn group_rings() -> Outcome {
    let subjects = ["cyclic:2", "cyclic:3", "s3"];
    let report = run_suite(&config(SuiteId::Groupring, &subjects), None).unwrap();
    let mut wanted = Vec::new();
    for s in subjects {
        wanted.push((s, "chain_map/BAR_PI_IOTA".to_string()));
        wanted.push((s, "pi_iota_identity".to_string()));
        wanted.push((s, "group_homology".to_string()));
        wanted.extend((0..=2).map(|n| (s, format!("pi_trace_phi_surjective/{n}"))));
    }
    summarize(require(&report, &wanted), format!("C_2, C_3, S_3, {} checks", wanted.len()))
}

fn relative() -> Outcome {
    let nilpotent = ["trunc3_to_q", "dual_to_q"];
    let identities = ["id:dual", "id:truncated_poly:3"];
    let subjects: Vec<&str> = nilpotent.iter().chain(&identities).copied().collect();
    let report = run_suite(&config(SuiteId::Relative, &subjects), None).unwrap();
    let mut wanted = Vec::new();
    for &s in &subjects {
        wanted.push((s, "morphism".to_string()));
        for kind in ["CL", "CHH", "CLAMBDA"] {
            wanted.push((s, format!("chain_map/{kind}")));
            wanted.push((s, format!("les/{kind}")));
        }
        wanted.extend((0..=3).map(|n| (s, format!("i_surjective/{n}"))));
        wanted.push((s, "chain_map/relative_trace_phi".to_string()));
        wanted.extend((0..=2).map(|n| (s, format!("i_trace_phi_surjective/{n}"))));
    }
    for s in identities {
        for kind in ["CL", "CHH", "CLAMBDA"] {
            wanted.push((s, format!("relative_betti/{kind}")));
        }
    }
    summarize(require(&report, &wanted), format!("{} morphisms, {} checks", subjects.len(), wanted.len()))
}

fn appendix() -> Outcome {
    let subjects = ["rationals", "dual", "split:2"];
    let report = run_suite(&config(SuiteId::Appendix, &subjects), None).unwrap();
    let mut wanted = vec![("rationals", "u_acyclic".to_string()), ("U_n", "presimplicial".to_string())];
    for s in subjects {
        wanted.push((s, "boundary_squared/P".to_string()));
        wanted.push((s, "chain_map/EMBED_CY".to_string()));
        wanted.push((s, "embed_cy_iso".to_string()));
    }
    wanted.push(("dual", "periodic_oracle".to_string()));
    let mut bad = require(&report, &wanted);
    for spec in subjects {
        let s = set(spec);
        let p = betti_numbers(&s.get(ComplexKind::P, CUTOFF).unwrap());
        let hh = betti_numbers(&s.get(ComplexKind::Chh, CUTOFF).unwrap());
        if p[..=3] != hh[..=3] {
            bad.push(format!("{spec}: H(P) {p:?}, HH {hh:?}"));
        }
    }
    let dual = builtin_from_spec("dual").unwrap();
    let oracle = betti_numbers(&truncated_poly_oracle(&dual, CUTOFF).unwrap());
    let hh = betti_numbers(&set("dual").get(ComplexKind::Chh, CUTOFF).unwrap());
    if oracle != hh || oracle[..] != [2, 1, 1, 1] {
        bad.push(format!("dual: HH {hh:?}, periodic resolution {oracle:?}"));
    }
    summarize(bad, format!("{} checks, dual HH {hh:?}", wanted.len()))
}

fn verify_all(out: &Path, cache: Option<&Path>) -> Result<BTreeMap<String, Vec<u8>>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_leibniz"));
    cmd.args(["verify", "--suite", "all", "--seed", "42", "--out"]).arg(out).env_remove("LEIBNIZ_CACHE_DIR");
    if let Some(c) = cache {
        cmd.arg("--cache").arg(c);
    }
    let status = cmd.output().map_err(|e| e.to_string())?.status;
    if !status.success() {
        return Err(format!("verify exited with {status}"));
    }
    let mut files = BTreeMap::new();
    for entry in std::fs::read_dir(out).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        if name != "manifest.json" {
            files.insert(name, std::fs::read(&path).map_err(|e| e.to_string())?);
        }
    }
    Ok(files)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let p = |s: &str| dir.path().join(s);
    let runs = || -> Result<Vec<BTreeMap<String, Vec<u8>>>, String> {
        Ok(vec![
            verify_all(&p("plain_a"), None)?,
            verify_all(&p("plain_b"), None)?,
            verify_all(&p("cold"), Some(&p("cache")))?,
            verify_all(&p("warm"), Some(&p("cache")))?,
        ])
    };
    match runs() {
        Err(e) => Outcome::new(false, e),
        Ok(runs) => {
            let same = runs.windows(2).all(|w| w[0] == w[1]);
            let files = runs[0].len();
            let json = runs[0].keys().filter(|k| k.ends_with(".json")).count();
            Outcome::new(same && json == SuiteId::ALL.len(), format!("{files} report files, 4 runs identical: {same}"))
        }
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("boundary soundness", boundary_soundness),
        ("phi is a chain map", phi_chain_map),
        ("chain-level diagrams commute", chain_level_diagrams),
        ("degree-zero isomorphisms", degree_zero),
        ("commutative Leibniz homology", commutative_powers),
        ("Morita trace", morita),
        ("group rings", group_rings),
        ("relative homology", relative),
        ("primitive complex", appendix),
        ("determinism", determinism),
    ];
    let mut failed = Vec::new();
    for (k, (title, run)) in criteria.into_iter().enumerate() {
        let o = run();
        println!("{} {:>2} {title}: {}", if o.ok { "PASS" } else { "FAIL" }, k + 1, o.detail);
        if !o.ok {
            failed.push(k + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
