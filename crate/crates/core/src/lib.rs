//! Exact propagation and throttling computations for standard zero forcing,
//! PSD forcing and power domination on small graphs.
//!
//! Graphs have at most [`MAX_ORDER`] vertices and are stored as bitmask
//! adjacency rows; every search is exhaustive and deterministic.

pub mod constructive;
pub mod domination;
pub mod enumerate;
mod error;
pub mod families;
pub mod forcing;
mod graph;
pub mod io;
pub mod iso;
mod set;
pub mod subsets;
pub mod throttling;

pub const MAX_ORDER: usize = 64;

pub use error::{Error, Result};
pub use forcing::{PropagationTime, RuleKind};
pub use graph::{Edge, Graph, VertexMap};
pub use set::{Members, VertexSet};
pub use throttling::ThrottlingKind;
