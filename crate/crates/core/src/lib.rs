//! Dynamic (Δ+C)-edge-coloring with worst-case recourse guarantees.
//!
//! The crate maintains an explicit proper edge coloring of a fully dynamic
//! simple graph. Insertions are recolored through *shift trees*: breadth-first
//! trees of shiftable paths rooted at the new edge, stopped either on a path
//! whose last edge frees a color or on enough repeated leaf copies of one
//! vertex, in which case a leaves handler picks the path. Around the engines
//! sit generators for adversarial instances with certified recourse floors,
//! exact small-instance oracles, and a workload harness with CSV/JSON
//! metrics.

pub mod adversary;
pub mod engine;
pub mod graph;
pub mod harness;
pub mod instance;
pub mod oracle;
pub mod shift_tree;

pub use engine::{Engine, EngineConfig, EngineError, EngineKind, RecourseReport, StopKind};
pub use graph::{Color, ColorSet, ColoredGraph, GraphError, ShiftPath, Vertex, Violation, UNCOLORED};
pub use instance::{read_instance, write_instance, InstanceError};
pub use oracle::{OracleBudget, OracleResult};
pub use shift_tree::{
    build_shift_tree, depth_budget, expand_skeleton, skeleton, BuildConfig, BuildOutcome,
    ExpandOutcome, ShiftTree, ShiftTreeError, Skeleton,
};
