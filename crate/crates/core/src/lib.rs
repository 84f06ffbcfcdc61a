pub mod algebra;
pub mod chain_maps;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod linhom;
pub mod verify;

pub use error::{Error, Result};
