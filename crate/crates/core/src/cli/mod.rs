//! Batch command line: `algebra`, `compute` and `verify`.

mod algebra_cmd;
mod compute;
mod manifest;
mod verify_cmd;

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::linhom::cache::MatrixCache;

pub use compute::{ComplexTable, ComputeReport, MapTable, RankRow, Row};
pub use manifest::{CacheStats, InputHash, RunManifest, Timing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable naming the boundary-matrix cache directory.
pub const CACHE_ENV: &str = "LEIBNIZ_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "leibniz",
    version,
    about = "Leibniz, Hochschild, cyclic and Lie homology of finite-dimensional algebras"
)]
pub struct Cli {
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List, validate or inspect algebras.
    Algebra {
        #[command(subcommand)]
        action: AlgebraAction,
    },
    /// Betti tables and induced-map ranks for one algebra.
    Compute(ComputeArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum AlgebraAction {
    /// Built-in algebras and morphisms.
    List,
    /// Check an algebra or morphism JSON file.
    Validate { file: PathBuf },
    /// Dimension, basis and multiplication table.
    Inspect {
        /// Built-in spec (`dual`, `cyclic:3`, `M2(dual)`) or JSON file.
        name: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct CacheArgs {
    /// Boundary-matrix cache directory (also read from LEIBNIZ_CACHE_DIR).
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

impl CacheArgs {
    fn open(&self) -> Result<Option<Arc<MatrixCache>>, Error> {
        let dir = self.cache.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
        dir.map(|d| MatrixCache::open(d).map(Arc::new)).transpose()
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Built-in spec or JSON file.
    #[arg(long)]
    pub algebra: String,
    /// Complex kinds, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub complex: Vec<crate::complexes::ComplexKind>,
    /// Map kinds, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub maps: Vec<crate::chain_maps::MapKind>,
    #[arg(long, default_value_t = 4)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 3)]
    pub matrix_size: usize,
    /// Basis elements allowed per degree.
    #[arg(long, default_value_t = crate::complexes::DEFAULT_BOUND)]
    pub max_dim: usize,
    /// Output directory for `report.json`, `report.md` and `manifest.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub cache: CacheArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite id or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = crate::verify::DEFAULT_CUTOFF)]
    pub cutoff: usize,
    #[arg(long, default_value_t = crate::verify::DEFAULT_MATRIX_SIZE)]
    pub matrix_size: usize,
    #[arg(long, default_value_t = crate::verify::DEFAULT_SEED)]
    pub seed: u64,
    /// Random chains per degree in the sampling checks.
    #[arg(long, default_value_t = 4)]
    pub samples: usize,
    #[arg(long, default_value_t = crate::complexes::DEFAULT_BOUND)]
    pub max_dim: usize,
    /// Subjects replacing the suite defaults (single suite only).
    #[arg(long = "algebra")]
    pub algebras: Vec<String>,
    /// Output directory for `<suite>.json`, `<suite>.md` and `manifest.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Replace φ by a sign-broken copy.
    #[arg(long)]
    pub debug_break_phi: bool,
    #[command(flatten)]
    pub cache: CacheArgs,
}

/// Exit code for an error: 3 for resource bounds, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceBound { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` and runs the command, returning the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let result = match &cli.command {
        Command::Algebra { action } => algebra_cmd::run(action),
        Command::Compute(args) => compute::run(args),
        Command::Verify(args) => verify_cmd::run(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
