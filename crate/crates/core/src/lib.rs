//! Exact computations with finite-dimensional Lie algebras over GF(p) and Q:
//! subspace lattices, ideals and subideals, cores, c-ideals and weak
//! c-ideals, and a verification suite for the structure theorems about them.

pub mod error;
pub mod exactfield;
pub mod ideals;
pub mod lattice;
pub mod liecore;
pub mod linspace;
pub mod structure;
pub mod corpus;
pub mod dsl;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
pub use exactfield::{Field, Scalar};
pub use lattice::Lattice;
pub use liecore::{LieAlgebra, SeriesKind};
pub use linspace::{Budget, Subspace, Vector};
