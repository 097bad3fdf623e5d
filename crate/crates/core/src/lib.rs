//! Maximum colored cut and colorful cut on edge-colored graphs.
//!
//! The crate covers the edge-colored graph model and its text formats,
//! kernelization by color-class removal, exact and approximate solvers, a
//! small SAT toolkit, and generators and verifiers for gadget reductions
//! that produce hard colorful-cut instances.

pub mod graph;
pub mod io;
pub mod kernel;
pub mod reductions;
pub mod sat;
pub mod solve;

pub use graph::{ColorSet, ColoredGraph, Cut, Edge, GraphError};
pub use io::{parse_cut, parse_graph, serialize_cut, serialize_graph, ParseError};
pub use kernel::{kernelize_colors, kernelize_value, KernelOutcome, Verdict};
pub use reductions::{ReductionArtifact, ReductionError, ReductionKind};
pub use sat::{Assignment, CnfFormula, Lit};
pub use solve::{
    brute_force_max, colorful_cut_decide, decide_max, greedy_half_colors, SolveError, SolveResult,
};
