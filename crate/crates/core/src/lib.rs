//! Cops-and-robbers workbench: an exact retrograde solver, constructive
//! pursuit strategies, exhaustive strategy verification and cop-number checks.

pub mod budget;
pub mod claims;
pub mod copwin;
pub mod error;
pub mod filament;
pub mod generators;
pub mod graph;
pub mod par;
pub mod policy;
pub mod reductions;
pub mod simulator;
pub mod solver;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
pub use par::Exec;
