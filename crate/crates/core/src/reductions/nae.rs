use std::collections::BTreeMap;

use crate::graph::{ColoredGraph, Edge};
use crate::reductions::{
    check_arity, occurrence_labels, ColorRole, Occurrence, ReductionArtifact, ReductionError,
    ReductionKind, VertexRole,
};
use crate::sat::CnfFormula;

/// NAE-3-SAT to COLORFUL CUT with every color class a `K2` or `K3`.
///
/// Clause `j` becomes a triangle of color `j` on occurrence vertices
/// `3j-2, 3j-1, 3j`; the triangle crosses iff its literals are not all equal.
/// Per variable, hub `a_i` is joined to every positive occurrence and hub
/// `b_i` to every negative one, and the first positive and first negative
/// occurrences are joined directly. Each of these edges has its own color,
/// so a colorful cut places all occurrences of a literal on one side and
/// opposite literals on opposite sides.
pub fn nae_to_cliques(f: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    check_arity(f)?;
    let m = f.clauses().len();
    if m == 0 {
        return Err(ReductionError::EmptyFormula);
    }
    let labels = occurrence_labels(f);
    let mut color_meaning: Vec<ColorRole> = (1..=m).map(ColorRole::Clause).collect();
    let mut vertex_meaning = Vec::new();
    let mut vertex_gadget = Vec::new();
    let mut edges = Vec::new();
    let mut literal_edge_map: BTreeMap<Occurrence, Vec<usize>> = BTreeMap::new();

    let mut positive: Vec<Vec<usize>> = vec![Vec::new(); f.var_count() + 1];
    let mut negative: Vec<Vec<usize>> = vec![Vec::new(); f.var_count() + 1];
    for (ci, clause) in labels.iter().enumerate() {
        let c = [3 * ci + 1, 3 * ci + 2, 3 * ci + 3];
        for (t, occ) in clause.iter().enumerate() {
            vertex_meaning.push(VertexRole::Occurrence {
                clause: ci + 1,
                position: t + 1,
            });
            vertex_gadget.push(Some(ci));
            if occ.positive {
                positive[occ.var].push(c[t]);
            } else {
                negative[occ.var].push(c[t]);
            }
        }
        for (t, (u, v)) in [(c[0], c[1]), (c[1], c[2]), (c[0], c[2])].into_iter().enumerate() {
            literal_edge_map.entry(clause[t]).or_default().push(edges.len());
            edges.push(Edge::new(u, v, ci + 1));
        }
    }

    let mut hub_edges = Vec::new();
    for var in 1..=f.var_count() {
        for (occs, hub) in [
            (&positive[var], VertexRole::PositiveHub { var }),
            (&negative[var], VertexRole::NegativeHub { var }),
        ] {
            if occs.is_empty() {
                continue;
            }
            vertex_meaning.push(hub);
            vertex_gadget.push(None);
            let id = vertex_meaning.len();
            hub_edges.extend(occs.iter().map(|&o| (id, o)));
        }
        if let (Some(&p), Some(&q)) = (positive[var].first(), negative[var].first()) {
            hub_edges.push((p, q));
        }
    }
    for (u, v) in hub_edges {
        color_meaning.push(ColorRole::Fresh);
        edges.push(Edge::new(u, v, color_meaning.len()));
    }

    let graph = ColoredGraph::new(vertex_meaning.len(), color_meaning.len(), edges)?;
    Ok(ReductionArtifact {
        graph,
        kind: ReductionKind::NaeCliques,
        formula: f.clone(),
        core: f.clone(),
        removed_clauses: Vec::new(),
        forced: Vec::new(),
        literal_edge_map,
        color_meaning,
        vertex_meaning,
        vertex_gadget,
        slots: Vec::new(),
        base_links: Vec::new(),
        base: None,
        attach_edges: Vec::new(),
    })
}
