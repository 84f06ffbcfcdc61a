use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::linhom::cache::MatrixCache;

#[derive(Clone, Debug, Serialize)]
pub struct InputHash {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CacheStats {
    pub dir: String,
    pub hits: usize,
    pub misses: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timing {
    pub wall_seconds: f64,
    pub checks: BTreeMap<String, f64>,
}

/// What a run read, wrote and how long it took. `run_hash` depends only on
/// the command, the config and the input contents.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub config: serde_json::Value,
    pub inputs: Vec<InputHash>,
    pub run_hash: String,
    pub outputs: Vec<String>,
    pub cache: Option<CacheStats>,
    pub timing: Timing,
}

impl RunManifest {
    pub fn new(command: &str, config: serde_json::Value, inputs: Vec<InputHash>) -> Self {
        let mut h = Sha256::new();
        h.update(command);
        h.update(config.to_string());
        for i in &inputs {
            h.update(&i.sha256);
        }
        Self {
            command: command.to_string(),
            config,
            inputs,
            run_hash: hex::encode(h.finalize()),
            outputs: Vec::new(),
            cache: None,
            timing: Timing::default(),
        }
    }

    pub fn record_cache(&mut self, cache: Option<&MatrixCache>) {
        self.cache =
            cache.map(|c| CacheStats { dir: c.root().display().to_string(), hits: c.hits(), misses: c.misses() });
    }

    pub fn write(&mut self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join("manifest.json");
        self.outputs.push(path.display().to_string());
        std::fs::write(&path, serde_json::to_string_pretty(self)?)?;
        Ok(path)
    }
}

/// Hash of a file given on the command line, if the spec names one.
pub fn input_hash(spec: &str) -> Option<InputHash> {
    let bytes = std::fs::read(spec).ok()?;
    Some(InputHash { path: spec.to_string(), sha256: hex::encode(Sha256::digest(&bytes)) })
}

/// Writes `contents` to `dir/name`, recording the path.
pub fn write_output(dir: &Path, name: &str, contents: &str, outputs: &mut Vec<String>) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    outputs.push(path.display().to_string());
    Ok(())
}
