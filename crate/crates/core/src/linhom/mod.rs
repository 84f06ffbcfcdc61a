//! Exact sparse rational linear algebra and the homology of bounded chain
//! complexes: ranks, kernels, representatives, induced maps, mapping cones
//! and exactness checks.

pub mod cache;
pub mod complex;
pub mod cone;
pub mod echelon;
pub mod exact;
pub mod homology;
pub mod sparse;

pub use complex::{ChainComplex, ChainMapRep, Witness};
pub use cone::{cone_map, mapping_cone, MappingCone};
pub use echelon::{kernel_basis, rank, rank_kernel_image, ColumnSolver, EchelonBasis, RankKernelImage};
pub use exact::{exactness_check, ExactnessReport, NodeReport};
pub use homology::{betti_numbers, homology, induced_image_rank, induced_map, HomologyData};
pub use sparse::{format_rational, parse_rational, q, q_frac, SparseMatrix, SparseVec, Q};
