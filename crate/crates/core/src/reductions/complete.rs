use std::collections::HashSet;

use crate::graph::{ColoredGraph, Edge, GraphError};
use crate::reductions::{
    multigraph_to_simple, sat_to_multigraph, BaseLink, ColorRole, ReductionArtifact,
    ReductionError, ReductionKind, VertexRole,
};
use crate::sat::CnfFormula;

/// Adds vertex `n + 1` and one new color `p + 1` on every missing pair, in
/// lexicographic order. The new vertex sides with any vertex, so `g` has a
/// colorful cut iff the completion does.
pub fn embed_complete(g: &ColoredGraph) -> Result<ColoredGraph, ReductionError> {
    if g.n() < 2 {
        return Err(GraphError::TooFewVertices { n: g.n() }.into());
    }
    if !g.is_simple() {
        return Err(ReductionError::NotSimple);
    }
    let n = g.n() + 1;
    let color = g.p() + 1;
    let present: HashSet<(usize, usize)> = g.edges().iter().map(Edge::pair).collect();
    let mut edges = g.edges().to_vec();
    for u in 1..=n {
        for v in u + 1..=n {
            if !present.contains(&(u, v)) {
                edges.push(Edge::new(u, v, color));
            }
        }
    }
    Ok(ColoredGraph::new(n, color, edges)?)
}

/// 3-SAT through the simple gadget graph into a complete graph.
pub fn sat_to_complete(f: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    let simple = multigraph_to_simple(&sat_to_multigraph(f)?)?;
    let graph = embed_complete(&simple.graph)?;
    let mut color_meaning = simple.color_meaning.clone();
    color_meaning.push(ColorRole::Fresh);
    let mut vertex_meaning = simple.vertex_meaning.clone();
    vertex_meaning.push(VertexRole::Added);
    let mut vertex_gadget = simple.vertex_gadget.clone();
    vertex_gadget.push(None);
    let mut base_links: Vec<BaseLink> = (1..=simple.graph.n()).map(BaseLink::Same).collect();
    base_links.push(BaseLink::Free);
    Ok(ReductionArtifact {
        graph,
        kind: ReductionKind::CompleteEmbed,
        formula: simple.formula.clone(),
        core: simple.core.clone(),
        removed_clauses: simple.removed_clauses.clone(),
        forced: simple.forced.clone(),
        literal_edge_map: simple.literal_edge_map.clone(),
        color_meaning,
        vertex_meaning,
        vertex_gadget,
        slots: simple.slots.clone(),
        base_links,
        base: Some(Box::new(simple)),
        attach_edges: Vec::new(),
    })
}
