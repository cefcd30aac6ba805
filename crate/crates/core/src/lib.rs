//! Exact zero forcing and skew zero forcing on small simple graphs.

pub mod error;

pub mod enumeration;
pub mod forcing;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod planarity;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
pub use forcing::{closure, eligible_forces, is_stalled, ClosureOutcome, Force, ForcingRule};
pub use graph::{components, cut_vertices, Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
pub use invariants::{
    failed_number, forcing_number, is_fort, max_stalled_witness, min_fort,
    singleton_stalled_vertices, FortRecord, InvariantBundle, NO_FAILED_SET,
};
pub use planarity::is_planar_desk;
