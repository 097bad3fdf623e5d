//! 3-SAT to COLORFUL CUT through clause triangles, and the derived
//! simple, connected degree-three, and odd-cycle-transversal-one variants.

use std::collections::{BTreeMap, HashMap};

use crate::graph::{ColoredGraph, Edge};
use crate::reductions::{
    check_arity, occurrence_labels, remove_single_polarity, BaseLink, ColorRole, Occurrence,
    ReductionArtifact, ReductionError, ReductionKind, VertexRole,
};
use crate::sat::CnfFormula;

/// Clause `j` becomes a triangle on corners `3j-2, 3j-1, 3j`. The literal at
/// position 1, 2, 3 owns the corner pair (1,2), (2,3), (1,3) respectively.
/// For every positive occurrence `j` and negative occurrence `k` of a
/// variable there is one pair color, placed on both literals' triangle
/// edges; each literal edge thus becomes a bundle of parallel edges.
///
/// Pair colors are numbered by variable, then `j`, then `k`. Edges are
/// listed clause by clause, position by position, each bundle in color order.
pub fn sat_to_multigraph(f: &CnfFormula) -> Result<ReductionArtifact, ReductionError> {
    check_arity(f)?;
    let pre = remove_single_polarity(f);
    if pre.core.clauses().is_empty() {
        return Err(ReductionError::EmptyAfterPreprocessing);
    }
    let labels = occurrence_labels(&pre.core);
    let vars = f.var_count();

    let mut counts = vec![(0usize, 0usize); vars + 1];
    for occ in labels.iter().flatten() {
        let c = &mut counts[occ.var];
        if occ.positive {
            c.0 = c.0.max(occ.index);
        } else {
            c.1 = c.1.max(occ.index);
        }
    }
    let mut color_meaning = Vec::new();
    let mut pair_color = HashMap::new();
    for (var, &(pos_total, neg_total)) in counts.iter().enumerate().skip(1) {
        for pos in 1..=pos_total {
            for neg in 1..=neg_total {
                color_meaning.push(ColorRole::Pair { var, pos, neg });
                pair_color.insert((var, pos, neg), color_meaning.len());
            }
        }
    }

    let mut edges = Vec::new();
    let mut vertex_meaning = Vec::new();
    let mut vertex_gadget = Vec::new();
    let mut slots = Vec::new();
    let mut literal_edge_map: BTreeMap<Occurrence, Vec<usize>> = BTreeMap::new();
    for (ci, clause) in labels.iter().enumerate() {
        let c = [3 * ci + 1, 3 * ci + 2, 3 * ci + 3];
        for corner in 1..=3 {
            vertex_meaning.push(VertexRole::Corner {
                clause: ci + 1,
                corner,
            });
            vertex_gadget.push(Some(ci));
        }
        let slot = [(c[0], c[1]), (c[1], c[2]), (c[0], c[2])];
        for (t, occ) in clause.iter().enumerate() {
            let (a, b) = slot[t];
            let (pos_total, neg_total) = counts[occ.var];
            let colors: Vec<usize> = if occ.positive {
                (1..=neg_total)
                    .map(|k| pair_color[&(occ.var, occ.index, k)])
                    .collect()
            } else {
                (1..=pos_total)
                    .map(|j| pair_color[&(occ.var, j, occ.index)])
                    .collect()
            };
            for color in colors {
                literal_edge_map.entry(*occ).or_default().push(edges.len());
                edges.push(Edge::new(a, b, color));
            }
        }
        slots.push(slot);
    }

    let graph = ColoredGraph::new(3 * labels.len(), color_meaning.len(), edges)?;
    Ok(ReductionArtifact {
        graph,
        kind: ReductionKind::Planar3SatMulti,
        formula: f.clone(),
        core: pre.core,
        removed_clauses: pre.removed,
        forced: pre.forced,
        literal_edge_map,
        color_meaning,
        vertex_meaning,
        vertex_gadget,
        slots,
        base_links: Vec::new(),
        base: None,
        attach_edges: Vec::new(),
    })
}

/// Replaces every edge `{v, w}` by a path `v - x - y - w`. The middle edge
/// keeps the color; both end edges get their own fresh color, so in a
/// colorful cut `x` sits opposite `v`, `y` opposite `w`, and the middle edge
/// crosses exactly when `{v, w}` did.
pub fn multigraph_to_simple(a: &ReductionArtifact) -> Result<ReductionArtifact, ReductionError> {
    a.expect_kind(ReductionKind::Planar3SatMulti)?;
    let g = &a.graph;
    let mut next_vertex = g.n();
    let mut color_meaning = a.color_meaning.clone();
    let mut vertex_meaning = a.vertex_meaning.clone();
    let mut vertex_gadget = a.vertex_gadget.clone();
    let mut base_links: Vec<BaseLink> = (1..=g.n()).map(BaseLink::Same).collect();
    let mut edges = Vec::with_capacity(3 * g.m());

    for (i, e) in g.edges().iter().enumerate() {
        let (x, y) = (next_vertex + 1, next_vertex + 2);
        next_vertex += 2;
        for (end, anchor) in [(1, e.u), (2, e.v)] {
            vertex_meaning.push(VertexRole::PathNode { edge: i + 1, end });
            vertex_gadget.push(a.vertex_gadget[e.u - 1]);
            base_links.push(BaseLink::Opposite(anchor));
        }
        let near = color_meaning.len() + 1;
        let far = near + 1;
        color_meaning.extend([ColorRole::Fresh, ColorRole::Fresh]);
        edges.push(Edge::new(e.u, x, near));
        edges.push(Edge::new(x, y, e.color));
        edges.push(Edge::new(y, e.v, far));
    }

    let literal_edge_map = a
        .literal_edge_map
        .iter()
        .map(|(occ, idx)| (*occ, idx.iter().map(|i| 3 * i + 1).collect()))
        .collect();
    let graph = ColoredGraph::new(next_vertex, color_meaning.len(), edges)?;
    Ok(ReductionArtifact {
        graph,
        kind: ReductionKind::Planar3SatSimple,
        formula: a.formula.clone(),
        core: a.core.clone(),
        removed_clauses: a.removed_clauses.clone(),
        forced: a.forced.clone(),
        literal_edge_map,
        color_meaning,
        vertex_meaning,
        vertex_gadget,
        slots: a.slots.clone(),
        base_links,
        base: Some(Box::new(a.clone())),
        attach_edges: Vec::new(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Port {
    Edge(usize),
    Tree,
}

/// Incident ports of `v` in splitting order. A corner's edges are grouped by
/// the triangle edge they come from; the first group is reversed so that,
/// seen from the junction outward, both ends of a bundle list its paths in
/// the same order.
fn port_order(
    h: &ColoredGraph,
    a: &ReductionArtifact,
    multi: &ColoredGraph,
    v: usize,
    has_tree: bool,
) -> Vec<Port> {
    let incident: Vec<usize> = (0..h.m()).filter(|&i| h.edges()[i].touches(v)).collect();
    if !matches!(a.vertex_meaning[v - 1], VertexRole::Corner { .. }) {
        let mut ports: Vec<Port> = incident.into_iter().map(Port::Edge).collect();
        if has_tree {
            ports.push(Port::Tree);
        }
        return ports;
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in incident {
        let e = h.edges()[i];
        let other_end = if e.u == v { e.v } else { e.u };
        let other_corner = match a.vertex_meaning[other_end - 1] {
            VertexRole::PathNode { edge, .. } => {
                let base = multi.edges()[edge - 1];
                if base.u == v {
                    base.v
                } else {
                    base.u
                }
            }
            _ => other_end,
        };
        groups.entry(other_corner).or_default().push(i);
    }
    let mut groups = groups.into_values();
    let mut ports: Vec<Port> = groups
        .next()
        .unwrap_or_default()
        .into_iter()
        .rev()
        .map(Port::Edge)
        .collect();
    if has_tree {
        ports.push(Port::Tree);
    }
    ports.extend(groups.flatten().map(Port::Edge));
    ports
}

/// Joins the clause gadgets through a complete binary tree (heap order, one
/// leaf per clause) attached at each gadget's lowest-index maximum-degree
/// vertex, then splits every vertex of degree four or more into a path of
/// copies. Consecutive copies are joined through a middle vertex by two
/// fresh-colored edges, which forces all copies to one side. End copies take
/// two ports, inner copies one, so a degree-4 vertex becomes a `P3`. All
/// added edges get fresh colors.
pub fn make_k4mf_connected(a: &ReductionArtifact) -> Result<ReductionArtifact, ReductionError> {
    a.expect_kind(ReductionKind::Planar3SatSimple)?;
    let h = &a.graph;
    let multi = &a.base.as_ref().expect("simple artifacts keep their multigraph").graph;
    let gadgets = a.slots.len();
    let deg = h.degrees();

    let mut attach: Vec<Option<usize>> = vec![None; gadgets];
    for v in 1..=h.n() {
        if let Some(j) = a.vertex_gadget[v - 1] {
            match attach[j] {
                Some(w) if deg[w - 1] >= deg[v - 1] => {}
                _ => attach[j] = Some(v),
            }
        }
    }
    let attach: Vec<usize> = attach.into_iter().map(|v| v.expect("gadget has vertices")).collect();
    let mut tree_gadget: HashMap<usize, usize> = HashMap::new();
    for (j, &v) in attach.iter().enumerate() {
        tree_gadget.insert(v, j);
    }

    // Copy index of each (vertex, port) for split vertices.
    let mut copy_of_port: HashMap<(usize, Port), usize> = HashMap::new();
    let mut first_id = vec![0usize; h.n()];
    let mut copies = vec![1usize; h.n()];
    let mut vertex_meaning = Vec::new();
    let mut vertex_gadget = Vec::new();
    let mut base_links = Vec::new();
    for v in 1..=h.n() {
        let ports = port_order(h, a, multi, v, tree_gadget.contains_key(&v));
        first_id[v - 1] = vertex_meaning.len() + 1;
        let gadget = a.vertex_gadget[v - 1];
        if ports.len() < 4 {
            vertex_meaning.push(a.vertex_meaning[v - 1]);
            vertex_gadget.push(gadget);
            base_links.push(BaseLink::Same(v));
            continue;
        }
        let count = ports.len() - 2;
        copies[v - 1] = count;
        for (i, port) in ports.iter().enumerate() {
            let copy = if i < 2 {
                0
            } else if i >= ports.len() - 2 {
                count - 1
            } else {
                i - 1
            };
            copy_of_port.insert((v, *port), copy);
        }
        for c in 0..count {
            vertex_meaning.push(VertexRole::Copy { of: v });
            vertex_gadget.push(gadget);
            base_links.push(BaseLink::Same(v));
            if c + 1 < count {
                vertex_meaning.push(VertexRole::Link { of: v });
                vertex_gadget.push(gadget);
                base_links.push(BaseLink::Opposite(v));
            }
        }
    }
    let tree_first = vertex_meaning.len() + 1;
    let tree_nodes = 2 * gadgets - 1;
    for node in 1..=tree_nodes {
        vertex_meaning.push(VertexRole::Tree { node });
        vertex_gadget.push(None);
        base_links.push(BaseLink::Free);
    }
    let tree_id = |node: usize| tree_first + node - 1;
    let endpoint = |v: usize, port: Port| match copy_of_port.get(&(v, port)) {
        Some(&c) => first_id[v - 1] + 2 * c,
        None => first_id[v - 1],
    };

    let mut color_meaning = a.color_meaning.clone();
    let fresh = |colors: &mut Vec<ColorRole>| {
        colors.push(ColorRole::Fresh);
        colors.len()
    };
    let mut edges: Vec<Edge> = h
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| Edge::new(endpoint(e.u, Port::Edge(i)), endpoint(e.v, Port::Edge(i)), e.color))
        .collect();
    for node in 2..=tree_nodes {
        let c = fresh(&mut color_meaning);
        edges.push(Edge::new(tree_id(node / 2), tree_id(node), c));
    }
    let mut attach_edges = Vec::with_capacity(gadgets);
    for (j, &v) in attach.iter().enumerate() {
        let c = fresh(&mut color_meaning);
        attach_edges.push(edges.len());
        edges.push(Edge::new(tree_id(gadgets + j), endpoint(v, Port::Tree), c));
    }
    for v in 1..=h.n() {
        for c in 0..copies[v - 1] - 1 {
            let copy = first_id[v - 1] + 2 * c;
            for (x, y) in [(copy, copy + 1), (copy + 1, copy + 2)] {
                let color = fresh(&mut color_meaning);
                edges.push(Edge::new(x, y, color));
            }
        }
    }

    let rep = |v: usize| first_id[v - 1];
    let slots = a
        .slots
        .iter()
        .map(|s| s.map(|(x, y)| (rep(x), rep(y))))
        .collect();
    let graph = ColoredGraph::new(vertex_meaning.len(), color_meaning.len(), edges)?;
    Ok(ReductionArtifact {
        graph,
        kind: ReductionKind::K4MinorFree,
        formula: a.formula.clone(),
        core: a.core.clone(),
        removed_clauses: a.removed_clauses.clone(),
        forced: a.forced.clone(),
        literal_edge_map: a.literal_edge_map.clone(),
        color_meaning,
        vertex_meaning,
        vertex_gadget,
        slots,
        base_links,
        base: Some(Box::new(a.clone())),
        attach_edges,
    })
}

/// Merges the first corner of every clause triangle into one apex (vertex
/// 1); the remaining vertices keep their order. Without the apex, each
/// gadget is a single bundle of parallel edges, hence bipartite.
pub fn make_oct_one(a: &ReductionArtifact) -> Result<ReductionArtifact, ReductionError> {
    a.expect_kind(ReductionKind::Planar3SatMulti)?;
    let g = &a.graph;
    let mut map = vec![0usize; g.n()];
    let mut vertex_meaning = vec![VertexRole::Apex];
    let mut vertex_gadget = vec![None];
    let mut base_links = vec![BaseLink::Free];
    for v in 1..=g.n() {
        if let VertexRole::Corner { corner: 1, .. } = a.vertex_meaning[v - 1] {
            map[v - 1] = 1;
        } else {
            vertex_meaning.push(a.vertex_meaning[v - 1]);
            vertex_gadget.push(a.vertex_gadget[v - 1]);
            base_links.push(BaseLink::Same(v));
            map[v - 1] = vertex_meaning.len();
        }
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge::new(map[e.u - 1], map[e.v - 1], e.color))
        .collect();
    let slots = a
        .slots
        .iter()
        .map(|s| s.map(|(x, y)| (map[x - 1], map[y - 1])))
        .collect();
    let graph = ColoredGraph::new(vertex_meaning.len(), g.p(), edges)?;
    Ok(ReductionArtifact {
        graph,
        kind: ReductionKind::OctOne,
        formula: a.formula.clone(),
        core: a.core.clone(),
        removed_clauses: a.removed_clauses.clone(),
        forced: a.forced.clone(),
        literal_edge_map: a.literal_edge_map.clone(),
        color_meaning: a.color_meaning.clone(),
        vertex_meaning,
        vertex_gadget,
        slots,
        base_links,
        base: Some(Box::new(a.clone())),
        attach_edges: Vec::new(),
    })
}
