//! Finite posets, lattices, tolerances, the doubling construction and
//! coalition lattices, each with brute-force cross-checks.

pub mod cli;
pub mod coalition;
pub mod dot;
pub mod doubling;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
pub use iso::{find_isomorphism, is_isomorphic};
pub use lattice::Lattice;
pub use poset::Poset;
pub use tolerance::{Block, DoublingTolerance, Tolerance};
