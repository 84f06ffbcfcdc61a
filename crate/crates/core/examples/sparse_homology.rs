//! Exact homology of a hand-built complex: the boundary of a triangle.

use leibniz::linhom::{betti_numbers, homology, q, ChainComplex, SparseMatrix};

fn main() -> leibniz::Result<()> {
    // vertices 0, 1, 2; edges 01, 02, 12
    let d1 = SparseMatrix::from_triplets(
        3,
        3,
        vec![(0, 0, q(-1)), (1, 0, q(1)), (0, 1, q(-1)), (2, 1, q(1)), (1, 2, q(-1)), (2, 2, q(1))],
    )?;
    // a zero C_2 so that degree 1 has a complete boundary
    let circle = ChainComplex::new("S^1", vec![3, 3, 0], vec![d1.clone(), SparseMatrix::zeros(3, 0)])?;
    println!("betti of the circle: {:?}", betti_numbers(&circle));

    // fill the triangle: 2-cell with boundary 01 - 02 + 12, plus a zero C_3
    let d2 = SparseMatrix::from_triplets(3, 1, vec![(0, 0, q(1)), (1, 0, q(-1)), (2, 0, q(1))])?;
    let disc = ChainComplex::new("D^2", vec![3, 3, 1, 0], vec![d1, d2, SparseMatrix::zeros(1, 0)])?;
    println!("∂² = 0: {}", disc.verify_boundary_squares().is_ok());
    println!("betti of the disc: {:?}", betti_numbers(&disc));

    let h1 = homology(&circle, 1)?;
    println!(
        "H_1(S^1): cycles {}, boundaries {}, representative {}",
        h1.cycle_dim, h1.boundary_rank, h1.representatives[0]
    );
    Ok(())
}
