use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// A bounded chain complex `C_0 <- C_1 <- ... <- C_cutoff`.
///
/// `boundary(n)` is the map `C_n -> C_{n-1}`; `boundary(0)` is the zero map
/// into the zero space.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    name: String,
    dims: Vec<usize>,
    boundaries: Vec<SparseMatrix>,
}

/// Where an identity failed: degree, column (basis element) and a short note.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub degree: usize,
    pub column: usize,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}, column {}: {}", self.degree, self.column, self.detail)
    }
}

impl ChainComplex {
    /// `boundaries[k]` is `∂_{k+1}: C_{k+1} -> C_k`.
    pub fn new(name: impl Into<String>, dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::ShapeMismatch("complex needs at least degree 0".into()));
        }
        if boundaries.len() + 1 != dims.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} degrees need {} boundary maps, got {}",
                dims.len(),
                dims.len() - 1,
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.shape() != (dims[k], dims[k + 1]) {
                return Err(Error::ShapeMismatch(format!(
                    "boundary {} has shape {:?}, expected {:?}",
                    k + 1,
                    b.shape(),
                    (dims[k], dims[k + 1])
                )));
            }
        }
        let mut all = Vec::with_capacity(dims.len());
        all.push(SparseMatrix::zeros(0, dims[0]));
        all.extend(boundaries);
        Ok(Self { name: name.into(), dims, boundaries: all })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cutoff(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Dimension in degree `n`; zero above the cutoff.
    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    /// `∂_n`, for `0 <= n <= cutoff`.
    pub fn boundary(&self, n: usize) -> Result<&SparseMatrix> {
        self.boundaries
            .get(n)
            .ok_or_else(|| Error::DegreeOutOfRange { degree: n, valid: format!("0..={}", self.cutoff()) })
    }

    /// Checks `∂_{n-1} ∘ ∂_n = 0` for `2 <= n <= cutoff`.
    pub fn verify_boundary_squares(&self) -> std::result::Result<(), Witness> {
        for n in 2..=self.cutoff() {
            let comp =
                self.boundaries[n - 1].mul(&self.boundaries[n]).expect("boundary shapes validated at construction");
            if let Some(col) = comp.first_nonzero_column() {
                return Err(Witness {
                    degree: n,
                    column: col,
                    detail: format!("∂∂ applied to basis element {col} is {}", comp.column(col)),
                });
            }
        }
        Ok(())
    }

    /// Direct sum complex, degree by degree (both must share a cutoff).
    pub fn direct_sum(&self, other: &ChainComplex, name: impl Into<String>) -> Result<ChainComplex> {
        if self.cutoff() != other.cutoff() {
            return Err(Error::CutoffMismatch(format!(
                "direct sum of cutoffs {} and {}",
                self.cutoff(),
                other.cutoff()
            )));
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let boundaries = (1..=self.cutoff()).map(|n| self.boundaries[n].direct_sum(&other.boundaries[n])).collect();
        ChainComplex::new(name, dims, boundaries)
    }

    /// Replaces the boundary in one degree; for building deliberately broken
    /// inputs in tests and debug runs.
    pub fn with_boundary(&self, n: usize, m: SparseMatrix) -> Result<ChainComplex> {
        let mut bs: Vec<SparseMatrix> = self.boundaries[1..].to_vec();
        if n == 0 || n > bs.len() {
            return Err(Error::DegreeOutOfRange { degree: n, valid: format!("1..={}", self.cutoff()) });
        }
        bs[n - 1] = m;
        ChainComplex::new(self.name.clone(), self.dims.clone(), bs)
    }
}

/// A chain map `F: C -> D` of degree `-shift`: `maps[n]: C_n -> D_{n-shift}`.
///
/// Degrees whose target falls outside `0..=D.cutoff` carry no matrix.
#[derive(Clone, Debug)]
pub struct ChainMapRep {
    name: String,
    source: Arc<ChainComplex>,
    target: Arc<ChainComplex>,
    shift: i64,
    maps: Vec<Option<SparseMatrix>>,
}

impl ChainMapRep {
    /// `maps[n]` must be `Some` exactly when `n - shift` is a target degree.
    pub fn new(
        name: impl Into<String>,
        source: Arc<ChainComplex>,
        target: Arc<ChainComplex>,
        shift: i64,
        maps: Vec<Option<SparseMatrix>>,
    ) -> Result<Self> {
        let name = name.into();
        if maps.len() != source.cutoff() + 1 {
            return Err(Error::ShapeMismatch(format!(
                "{name}: {} maps for a source with cutoff {}",
                maps.len(),
                source.cutoff()
            )));
        }
        for (n, m) in maps.iter().enumerate() {
            let t = n as i64 - shift;
            let in_range = t >= 0 && (t as usize) <= target.cutoff();
            match (m, in_range) {
                (Some(m), true) => {
                    let expected = (target.dim(t as usize), source.dim(n));
                    if m.shape() != expected {
                        return Err(Error::ShapeMismatch(format!(
                            "{name} in degree {n}: shape {:?}, expected {:?}",
                            m.shape(),
                            expected
                        )));
                    }
                }
                (None, false) => {}
                (Some(_), false) => {
                    return Err(Error::ShapeMismatch(format!("{name}: degree {n} maps outside the target")))
                }
                (None, true) => return Err(Error::ShapeMismatch(format!("{name}: degree {n} is missing"))),
            }
        }
        Ok(Self { name, source, target, shift, maps })
    }

    /// Builds the map from a per-degree constructor, called only on degrees
    /// whose target exists.
    pub fn from_fn(
        name: impl Into<String>,
        source: Arc<ChainComplex>,
        target: Arc<ChainComplex>,
        shift: i64,
        mut f: impl FnMut(usize, usize) -> Result<SparseMatrix>,
    ) -> Result<Self> {
        let mut maps = Vec::with_capacity(source.cutoff() + 1);
        for n in 0..=source.cutoff() {
            let t = n as i64 - shift;
            if t >= 0 && (t as usize) <= target.cutoff() {
                maps.push(Some(f(n, t as usize)?));
            } else {
                maps.push(None);
            }
        }
        Self::new(name, source, target, shift, maps)
    }

    pub fn identity(c: Arc<ChainComplex>) -> Self {
        let maps = (0..=c.cutoff()).map(|n| Some(SparseMatrix::identity(c.dim(n)))).collect();
        Self::new(format!("id({})", c.name()), c.clone(), c, 0, maps).expect("identity is well-formed")
    }

    pub fn zero(source: Arc<ChainComplex>, target: Arc<ChainComplex>, shift: i64) -> Self {
        let (s, t) = (source.clone(), target.clone());
        Self::from_fn("0", source, target, shift, |n, m| Ok(SparseMatrix::zeros(t.dim(m), s.dim(n))))
            .expect("zero map is well-formed")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Arc<ChainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChainComplex> {
        &self.target
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// The matrix out of source degree `n`, if its target degree exists.
    pub fn map(&self, n: usize) -> Option<&SparseMatrix> {
        self.maps.get(n).and_then(Option::as_ref)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().flatten().all(SparseMatrix::is_zero)
    }

    pub fn target_degree(&self, n: usize) -> Option<usize> {
        let t = n as i64 - self.shift;
        (t >= 0 && (t as usize) <= self.target.cutoff()).then_some(t as usize)
    }

    /// Checks `∂' F_n = F_{n-1} ∂` wherever both sides are defined.
    pub fn verify(&self) -> std::result::Result<(), Witness> {
        for n in 1..=self.source.cutoff() {
            let (Some(f_n), Some(t)) = (self.map(n), self.target_degree(n)) else {
                continue;
            };
            let lhs = self.target.boundaries[t].mul(f_n).expect("validated shapes");
            let rhs = match self.map(n - 1) {
                Some(f_prev) => f_prev.mul(&self.source.boundaries[n]).expect("validated shapes"),
                // F_{n-1} lands below degree 0: the right side is the zero map
                None => {
                    if t == 0 {
                        continue;
                    }
                    SparseMatrix::zeros(lhs.rows(), lhs.cols())
                }
            };
            let diff = lhs.sub(&rhs).expect("same shape");
            if let Some(col) = diff.first_nonzero_column() {
                return Err(Witness {
                    degree: n,
                    column: col,
                    detail: format!("{}: ∂F - F∂ on basis element {col} is {}", self.name, diff.column(col)),
                });
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMapRep) -> Result<ChainMapRep> {
        if first.target.dims() != self.source.dims() {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} after {}: {} vs {}",
                self.name,
                first.name,
                self.source.name(),
                first.target.name()
            )));
        }
        let shift = first.shift + self.shift;
        let name = format!("{}∘{}", self.name, first.name);
        ChainMapRep::from_fn(name, first.source.clone(), self.target.clone(), shift, |n, _| {
            let mid = first.target_degree(n).expect("target in range");
            let f = first.map(n).expect("defined");
            let g = self
                .map(mid)
                .ok_or_else(|| Error::CutoffMismatch(format!("{} undefined in degree {mid}", self.name)))?;
            g.mul(f)
        })
    }

    /// Degree-wise difference; both maps must share source, target and shift.
    pub fn sub(&self, other: &ChainMapRep) -> Result<ChainMapRep> {
        if self.shift != other.shift
            || self.source.dims() != other.source.dims()
            || self.target.dims() != other.target.dims()
        {
            return Err(Error::ShapeMismatch(format!("{} and {} are not parallel", self.name, other.name)));
        }
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => a.sub(b).map(Some),
                _ => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMapRep::new(
            format!("{}-{}", self.name, other.name),
            self.source.clone(),
            self.target.clone(),
            self.shift,
            maps,
        )
    }

    /// First degree/column where the two maps differ, if any.
    pub fn first_difference(&self, other: &ChainMapRep) -> Result<Option<Witness>> {
        let diff = self.sub(other)?;
        for n in 0..=diff.source.cutoff() {
            if let Some(m) = diff.map(n) {
                if let Some(col) = m.first_nonzero_column() {
                    return Ok(Some(Witness {
                        degree: n,
                        column: col,
                        detail: format!("{} and {} differ by {}", self.name, other.name, m.column(col)),
                    }));
                }
            }
        }
        Ok(None)
    }

    /// Replaces the matrix in one degree (debug and test use).
    pub fn with_map(&self, n: usize, m: SparseMatrix) -> Result<ChainMapRep> {
        let mut maps = self.maps.clone();
        if n >= maps.len() || maps[n].is_none() {
            return Err(Error::DegreeOutOfRange { degree: n, valid: format!("defined degrees of {}", self.name) });
        }
        maps[n] = Some(m);
        ChainMapRep::new(self.name.clone(), self.source.clone(), self.target.clone(), self.shift, maps)
    }
}
