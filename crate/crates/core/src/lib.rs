//! Max-leaf spanning trees: structure detection and reduction rules around a
//! potential-guided builder, with exact and parameterized solvers to check it.

pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod patterns;
pub mod potential;
pub mod reductions;
pub mod solver;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
