//! On-disk matrix cache: one text file per key, first line `# rows cols`,
//! then `row col p/q` per nonzero entry sorted by (row, col).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use super::sparse::{format_rational, parse_rational, SparseMatrix};
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct MatrixCache {
    root: PathBuf,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl MatrixCache {
    pub fn open(root: impl Into<PathBuf>) -> Result<Self> {
        let root = root.into();
        fs::create_dir_all(&root)?;
        Ok(Self { root, hits: AtomicUsize::new(0), misses: AtomicUsize::new(0) })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    /// File for `(algebra hash, kind, degree)`; `kind` may carry parameters.
    pub fn path_for(&self, algebra_hash: &str, kind: &str, degree: usize) -> PathBuf {
        let kind: String =
            kind.chars().map(|c| if c.is_ascii_alphanumeric() || c == '_' || c == '-' { c } else { '_' }).collect();
        self.root.join(format!("{algebra_hash}-{kind}-{degree}.txt"))
    }

    pub fn load(&self, algebra_hash: &str, kind: &str, degree: usize) -> Result<Option<SparseMatrix>> {
        let path = self.path_for(algebra_hash, kind, degree);
        if !path.exists() {
            self.misses.fetch_add(1, Ordering::Relaxed);
            return Ok(None);
        }
        let m = read_matrix(&fs::read_to_string(&path)?)?;
        self.hits.fetch_add(1, Ordering::Relaxed);
        Ok(Some(m))
    }

    pub fn store(&self, algebra_hash: &str, kind: &str, degree: usize, m: &SparseMatrix) -> Result<()> {
        let path = self.path_for(algebra_hash, kind, degree);
        // write-then-rename so a concurrent reader never sees a partial file
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(write_matrix(m).as_bytes())?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Cached value if present, otherwise computes and stores it.
    pub fn get_or_build(
        &self,
        algebra_hash: &str,
        kind: &str,
        degree: usize,
        build: impl FnOnce() -> Result<SparseMatrix>,
    ) -> Result<SparseMatrix> {
        if let Some(m) = self.load(algebra_hash, kind, degree)? {
            return Ok(m);
        }
        let m = build()?;
        self.store(algebra_hash, kind, degree, &m)?;
        Ok(m)
    }
}

pub fn write_matrix(m: &SparseMatrix) -> String {
    let mut out = format!("# {} {}\n", m.rows(), m.cols());
    for (r, c, x) in m.triplets() {
        out.push_str(&format!("{r} {c} {}\n", format_rational(&x)));
    }
    out
}

pub fn read_matrix(text: &str) -> Result<SparseMatrix> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .and_then(|h| h.strip_prefix('#'))
        .ok_or_else(|| Error::Parse("matrix file lacks a `# rows cols` header".into()))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Parse(format!("bad matrix header: {e}")))?;
    let [rows, cols] = dims[..] else {
        return Err(Error::Parse("matrix header needs two numbers".into()));
    };
    let mut triplets = Vec::new();
    for (k, line) in lines.enumerate() {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [r, c, x] = parts[..] else {
            return Err(Error::Parse(format!("line {}: expected `row col p/q`", k + 2)));
        };
        let r = r.parse().map_err(|e| Error::Parse(format!("line {}: {e}", k + 2)))?;
        let c = c.parse().map_err(|e| Error::Parse(format!("line {}: {e}", k + 2)))?;
        triplets.push((r, c, parse_rational(x)?));
    }
    SparseMatrix::from_triplets(rows, cols, triplets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = MatrixCache::open(dir.path()).unwrap();
        let m = SparseMatrix::from_i64_rows(&[&[0, -2, 0], &[3, 0, 1]]).scale(&crate::linhom::q_frac(1, 2));
        assert!(cache.load("h", "CL", 2).unwrap().is_none());
        cache.store("h", "CL", 2, &m).unwrap();
        assert_eq!(cache.load("h", "CL", 2).unwrap().unwrap(), m);
        assert_eq!((cache.hits(), cache.misses()), (1, 1));
        let text = write_matrix(&m);
        assert_eq!(text, "# 2 3\n0 1 -1/1\n1 0 3/2\n1 2 1/2\n");
    }
}
