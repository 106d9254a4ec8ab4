//! Tail/cycle decomposition of self-maps on `Z_N`.

mod graph;
mod orbit;
mod selfmap;
mod tetration;

pub use graph::{Cycle, FunctionalGraph, GraphCensus};
pub use orbit::{orbit_summary, OrbitSummary, DEFAULT_MEMBER_CAP};
pub use selfmap::{MapKind, SelfMap};
pub use tetration::{tetration_check, TetrationReport, TETRATION_MAX_K};
