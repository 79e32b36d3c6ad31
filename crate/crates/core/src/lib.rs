//! Metric spaces induced by k-dimensional chess pieces on the lattice
//! `C(n,k) = {0,..,n-1}^k`: move generation, exact BFS radii and diameters,
//! composite bishop and pawn metrics, and closed-form reference values.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod metrics;
pub mod pieces;
pub mod search;

pub use error::{Error, Result};
pub use lattice::{Board, Color, SymmetryClass, Vertex};
pub use pieces::{PieceId, PieceRule, Subject};
pub use search::{Distance, DistanceField, MemoryBudget, PieceGraph, RadiusDiameterReport};
