//! Generators for hard COLORFUL CUT instances built from (NAE-)3-SAT, the
//! witness translations in both directions, and structural verifiers.
//!
//! Numbering is canonical so generated files are reproducible: clauses in
//! input order, then variables ascending, then occurrences in order of
//! appearance (clause, then position).

mod complete;
mod nae;
mod planar;
mod provenance;
mod verify;
mod witness;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{ColoredGraph, GraphError};
use crate::sat::CnfFormula;

pub use complete::{embed_complete, sat_to_complete};
pub use nae::nae_to_cliques;
pub use planar::{make_k4mf_connected, make_oct_one, multigraph_to_simple, sat_to_multigraph};
pub use provenance::{parse_provenance, serialize_provenance, Provenance};
pub use verify::{
    has_k4_minor_brute, verify_graph, verify_series_parallel, verify_structural, CheckResult,
    StructuralReport,
};
pub use witness::{assignment_to_cut, cut_to_assignment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("clause {clause} has {len} literals; exactly 3 are required")]
    ClauseArity { clause: usize, len: usize },
    #[error("no clauses remain after removing clauses with single-polarity variables")]
    EmptyAfterPreprocessing,
    #[error("formula has no clauses")]
    EmptyFormula,
    #[error("expected a {expected} artifact, got {got}")]
    WrongKind {
        expected: ReductionKind,
        got: ReductionKind,
    },
    #[error("graph has parallel edges; a simple graph is required")]
    NotSimple,
    #[error("assignment covers {got} variables, formula has {expected}")]
    AssignmentSize { expected: usize, got: usize },
    #[error("assignment does not {0} the formula")]
    NotSatisfying(&'static str),
    #[error("cut is not colorful")]
    NotColorful,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionKind {
    /// Clause triangles whose literal edges become parallel pair-colored edges.
    Planar3SatMulti,
    /// The multigraph with every edge replaced by a three-edge path.
    Planar3SatSimple,
    /// The simple graph joined by a binary tree and repaired to degree three.
    K4MinorFree,
    /// The multigraph with one corner of every gadget merged into an apex.
    OctOne,
    /// A simple instance completed by one extra vertex and one extra color.
    CompleteEmbed,
    /// Monochromatic clause triangles plus hub vertices, from NAE-3-SAT.
    NaeCliques,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 6] = [
        ReductionKind::Planar3SatMulti,
        ReductionKind::Planar3SatSimple,
        ReductionKind::K4MinorFree,
        ReductionKind::OctOne,
        ReductionKind::CompleteEmbed,
        ReductionKind::NaeCliques,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Planar3SatMulti => "planar-multi",
            ReductionKind::Planar3SatSimple => "planar-simple",
            ReductionKind::K4MinorFree => "k4mf",
            ReductionKind::OctOne => "oct1",
            ReductionKind::CompleteEmbed => "complete",
            ReductionKind::NaeCliques => "nae",
        }
    }

    /// Whether the source problem is plain SAT (as opposed to NAE-SAT).
    pub fn is_sat_based(self) -> bool {
        self != ReductionKind::NaeCliques
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown reduction kind `{s}`"))
    }
}

/// Where a color comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ColorRole {
    /// Shared by the `pos`-th positive and `neg`-th negative occurrence of `var`.
    Pair { var: usize, pos: usize, neg: usize },
    /// The color of clause triangle `clause` (1-based).
    Clause(usize),
    /// Used by exactly one gadget edge.
    Fresh,
}

/// Where a vertex comes from. Clause, corner and occurrence numbers are
/// 1-based; `edge` refers to an edge index (1-based) of the base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    Corner { clause: usize, corner: usize },
    /// Inner vertex of the path replacing base edge `edge`; `end` is 1 next
    /// to the edge's first endpoint and 2 next to its second.
    PathNode { edge: usize, end: usize },
    /// One of the copies a high-degree base vertex was split into.
    Copy { of: usize },
    /// Middle vertex of a link between two copies of base vertex `of`.
    Link { of: usize },
    /// Binary tree node in heap numbering (root is 1).
    Tree { node: usize },
    Apex,
    Occurrence { clause: usize, position: usize },
    PositiveHub { var: usize },
    NegativeHub { var: usize },
    /// The vertex added to complete the graph.
    Added,
}

/// A literal occurrence: the `index`-th positive (or negative) occurrence of `var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub var: usize,
    pub index: usize,
    pub positive: bool,
}

/// Relation of a vertex to the graph an artifact was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BaseLink {
    Same(usize),
    Opposite(usize),
    /// Placed by the kind-specific witness recipe.
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: ColoredGraph,
    pub kind: ReductionKind,
    /// The formula as given.
    pub formula: CnfFormula,
    /// The clauses the graph actually encodes (same variable numbering).
    pub core: CnfFormula,
    /// Indices into `formula` of clauses dropped by preprocessing.
    pub removed_clauses: Vec<usize>,
    /// Values fixing the dropped clauses, for variables eliminated by preprocessing.
    pub forced: Vec<(usize, bool)>,
    /// Edge indices (0-based) realizing each literal occurrence.
    pub literal_edge_map: BTreeMap<Occurrence, Vec<usize>>,
    /// `color_meaning[c - 1]` explains color `c`.
    pub color_meaning: Vec<ColorRole>,
    /// `vertex_meaning[v - 1]` explains vertex `v`.
    pub vertex_meaning: Vec<VertexRole>,
    /// 0-based clause gadget containing each vertex, if any.
    pub vertex_gadget: Vec<Option<usize>>,
    /// Per core clause and literal position, two vertices whose sides decide
    /// whether that literal's triangle edge lies inside a part.
    pub(crate) slots: Vec<[(usize, usize); 3]>,
    pub(crate) base_links: Vec<BaseLink>,
    pub(crate) base: Option<Box<ReductionArtifact>>,
    /// Tree-attachment edge index per gadget (degree-repaired graphs only).
    pub(crate) attach_edges: Vec<usize>,
}

impl ReductionArtifact {
    pub fn provenance(&self) -> Provenance {
        Provenance {
            colors: self.color_meaning.clone(),
            vertices: self.vertex_meaning.clone(),
        }
    }

    pub fn apex(&self) -> Option<usize> {
        self.vertex_meaning
            .iter()
            .position(|r| *r == VertexRole::Apex)
            .map(|i| i + 1)
    }

    fn expect_kind(&self, expected: ReductionKind) -> Result<(), ReductionError> {
        if self.kind != expected {
            return Err(ReductionError::WrongKind {
                expected,
                got: self.kind,
            });
        }
        Ok(())
    }
}

/// Builds the artifact of the given kind from a formula, chaining the
/// derived kinds through their bases.
pub fn generate(kind: ReductionKind, f: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    match kind {
        ReductionKind::Planar3SatMulti => sat_to_multigraph(f),
        ReductionKind::Planar3SatSimple => multigraph_to_simple(&sat_to_multigraph(f)?),
        ReductionKind::K4MinorFree => {
            make_k4mf_connected(&multigraph_to_simple(&sat_to_multigraph(f)?)?)
        }
        ReductionKind::OctOne => make_oct_one(&sat_to_multigraph(f)?),
        ReductionKind::CompleteEmbed => sat_to_complete(f),
        ReductionKind::NaeCliques => nae_to_cliques(f),
    }
}

/// Result of dropping clauses that contain a single-polarity variable,
/// repeated until every remaining variable occurs with both signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preprocessed {
    pub core: CnfFormula,
    pub removed: Vec<usize>,
    pub forced: Vec<(usize, bool)>,
}

pub fn remove_single_polarity(f: &CnfFormula) -> Preprocessed {
    let mut kept = vec![true; f.clauses().len()];
    let mut forced = Vec::new();
    loop {
        let mut polarity = vec![0u8; f.var_count() + 1];
        for (_, c) in kept.iter().zip(f.clauses()).filter(|(k, _)| **k) {
            for lit in c {
                polarity[lit.var()] |= if lit.is_positive() { 1 } else { 2 };
            }
        }
        let pure: Vec<(usize, bool)> = polarity
            .iter()
            .enumerate()
            .filter(|(_, &p)| p == 1 || p == 2)
            .map(|(v, &p)| (v, p == 1))
            .collect();
        if pure.is_empty() {
            break;
        }
        for (i, clause) in f.clauses().iter().enumerate() {
            if kept[i] && clause.iter().any(|l| pure.iter().any(|&(v, _)| v == l.var())) {
                kept[i] = false;
            }
        }
        forced.extend(pure);
    }
    let removed = (0..kept.len()).filter(|&i| !kept[i]).collect();
    let clauses = f
        .clauses()
        .iter()
        .zip(&kept)
        .filter(|(_, &k)| k)
        .map(|(c, _)| c.clone())
        .collect();
    Preprocessed {
        core: CnfFormula::new(f.var_count(), clauses).expect("subset of a valid formula"),
        removed,
        forced,
    }
}

/// Occurrence labels of every literal of `f`, per clause and position.
pub(crate) fn occurrence_labels(f: &CnfFormula) -> Vec<Vec<Occurrence>> {
    let mut seen = vec![(0usize, 0usize); f.var_count() + 1];
    f.clauses()
        .iter()
        .map(|c| {
            c.iter()
                .map(|lit| {
                    let counter = &mut seen[lit.var()];
                    let index = if lit.is_positive() {
                        counter.0 += 1;
                        counter.0
                    } else {
                        counter.1 += 1;
                        counter.1
                    };
                    Occurrence {
                        var: lit.var(),
                        index,
                        positive: lit.is_positive(),
                    }
                })
                .collect()
        })
        .collect()
}

pub(crate) fn check_arity(f: &CnfFormula) -> Result<(), ReductionError> {
    match f.clauses().iter().enumerate().find(|(_, c)| c.len() != 3) {
        Some((i, c)) => Err(ReductionError::ClauseArity {
            clause: i + 1,
            len: c.len(),
        }),
        None => Ok(()),
    }
}
