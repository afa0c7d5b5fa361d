//! Exact combinatorics of the 2-switch operation on small labeled graphs.
//!
//! A 2-switch replaces edges `ab`, `cd` by `ac`, `bd` (when the latter are
//! absent); it preserves every vertex degree. This crate provides:
//!
//! * [`graph`] — immutable labeled simple graphs on `{0..n}` with structural
//!   predicates and the cycle/forest edge decomposition of pseudoforests;
//! * [`switch`] — the 2-switch operation, its inverse, enumeration, and
//!   classifiers deciding whether a switch keeps a tree/forest/unicyclic
//!   graph/pseudoforest inside its class;
//! * [`transition`] — constructive switch sequences between two forests or
//!   two pseudoforests with the same degree vector, staying inside the class;
//! * [`explore`] — exhaustive enumeration of the labeled realizations of a
//!   degree vector, realization graphs, and small counterexample families;
//! * [`params`] — exact brute-force computation of classic integer graph
//!   parameters (matching, independence, domination, zero forcing, ...);
//! * [`stability`] — sweeps measuring how much a single 2-switch can move a
//!   parameter inside a realization family, and whether the attained values
//!   form a contiguous integer interval.
//!
//! Vertices are `0`-based `usize` indices throughout the Rust API. All text
//! interfaces (edge-list files, JSON, DOT, error messages produced by the
//! parsers) use 1-based labels.

#![forbid(unsafe_code)]

pub mod degree_expr;
pub mod explore;
pub mod graph;
pub mod params;
pub mod stability;
pub mod switch;
pub mod transition;

pub use explore::{
    are_isomorphic, build_realization_graph, connectivity, construct_counterexample, distance,
    enumerate_all_graphs, enumerate_realizations, CounterexampleKind, ExplorationReport, Filter,
    RealizationGraph,
};
pub use graph::{
    CycForDecomposition, Cyclicity, DegreeVector, EdgeMask, GraphError, LabeledGraph,
    StructuralClass, MAX_VERTICES,
};
pub use params::ParamId;
pub use stability::ParamReport;
pub use switch::{SwitchKind, SwitchVerdict, TwoSwitch};
pub use transition::SwitchSequence;
