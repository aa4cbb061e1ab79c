//! Combinatorial manifolds with many symmetries: orbit search, manifold
//! certification, flips and fingerprint analysis for the 27-vertex
//! 16-dimensional complexes K1..K4 and their small relatives.

pub mod analysis;
pub mod cli;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod flips;
pub mod group;
pub mod search;
pub mod verify;

pub use complex::{Complex, FaceVector, VertexSet};
pub use error::{Error, Result};
pub use group::{Permutation, PermGroup};
