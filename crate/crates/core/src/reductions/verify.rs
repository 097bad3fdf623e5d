//! Structural checks on generated graphs.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::graph::ColoredGraph;
use crate::reductions::{ColorRole, ReductionArtifact, ReductionKind, VertexRole};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Counterexample or measured value.
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub kind: ReductionKind,
    pub checks: Vec<CheckResult>,
}

impl StructuralReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for StructuralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAIL" };
            writeln!(f, "{mark:<4} {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn neighbor_sets(g: &ColoredGraph) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); g.n() + 1];
    for e in g.edges() {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    adj
}

/// Whether `g` has no `K4` minor, by exhaustive series-parallel reduction:
/// vertices with at most one neighbor are deleted and vertices with exactly
/// two neighbors are smoothed (parallel edges merge). The graph is
/// `K4`-minor-free iff this empties it.
pub fn verify_series_parallel(g: &ColoredGraph) -> bool {
    let mut adj = neighbor_sets(g);
    let mut alive = vec![true; g.n() + 1];
    let mut queue: VecDeque<usize> = (1..=g.n()).collect();
    let mut remaining = g.n();
    while let Some(v) = queue.pop_front() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for &w in &nbrs {
            adj[w].remove(&v);
        }
        if let [a, b] = nbrs[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj[v].clear();
        alive[v] = false;
        remaining -= 1;
        queue.extend(nbrs);
    }
    remaining == 0
}

/// Exhaustive `K4`-minor search over all ways to pick four disjoint
/// connected branch sets, pairwise joined by an edge. Branch sets are
/// labeled in order of their smallest vertex so each choice is visited once.
/// Exponential; intended as an oracle for graphs with at most eight vertices.
pub fn has_k4_minor_brute(g: &ColoredGraph) -> bool {
    if g.n() < 4 {
        return false;
    }
    let adj = neighbor_sets(g);
    let mut labels = vec![UNUSED; g.n()];
    assign_labels(&adj, &mut labels, 0, 0)
}

const UNUSED: u8 = 4;

fn assign_labels(adj: &[BTreeSet<usize>], labels: &mut [u8], next: usize, opened: u8) -> bool {
    if next == labels.len() {
        return opened == 4 && branch_sets_form_k4(adj, labels);
    }
    // too few vertices left to open the remaining sets
    if labels.len() - next < usize::from(4 - opened) {
        return false;
    }
    for label in (0..=opened.min(3)).chain([UNUSED]) {
        labels[next] = label;
        let opened_now = if label != UNUSED && label == opened { opened + 1 } else { opened };
        if assign_labels(adj, labels, next + 1, opened_now) {
            return true;
        }
    }
    labels[next] = UNUSED;
    false
}

/// `labels[v - 1]` in `0..4` names a branch set; [`UNUSED`] means none.
fn branch_sets_form_k4(adj: &[BTreeSet<usize>], labels: &[u8]) -> bool {
    let mut touching = [[false; 4]; 4];
    let mut seen = vec![false; labels.len() + 1];
    for b in 0..4u8 {
        let start = (1..=labels.len()).find(|&v| labels[v - 1] == b).unwrap();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                let lw = labels[w - 1];
                if lw == b {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                } else if lw != UNUSED {
                    touching[b as usize][lw as usize] = true;
                }
            }
        }
        if (1..=labels.len()).any(|v| labels[v - 1] == b && !seen[v]) {
            return false;
        }
    }
    (0..4).all(|a| (0..4).all(|b| a == b || touching[a][b]))
}

fn check_simple(g: &ColoredGraph) -> CheckResult {
    let mut seen = HashSet::new();
    match g.edges().iter().map(|e| e.pair()).find(|p| !seen.insert(*p)) {
        Some((u, v)) => CheckResult::new("simple", false, format!("parallel edges between {u} and {v}")),
        None => CheckResult::new("simple", true, "no parallel edges"),
    }
}

fn check_connected(g: &ColoredGraph) -> CheckResult {
    if g.n() == 0 {
        return CheckResult::new("connected", true, "empty graph");
    }
    let adj = neighbor_sets(g);
    let mut seen = vec![false; g.n() + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    match (1..=g.n()).find(|&v| !seen[v]) {
        Some(v) => CheckResult::new("connected", false, format!("vertex {v} unreachable from 1")),
        None => CheckResult::new("connected", true, "one component"),
    }
}

fn check_max_degree(g: &ColoredGraph, bound: usize) -> CheckResult {
    let deg = g.degrees();
    let max = deg.iter().copied().max().unwrap_or(0);
    let name = format!("max-degree<={bound}");
    match deg.iter().position(|&d| d > bound) {
        Some(i) => CheckResult::new(&name, false, format!("vertex {} has degree {}", i + 1, deg[i])),
        None => CheckResult::new(&name, true, format!("max degree {max}")),
    }
}

fn check_class_size(g: &ColoredGraph, bound: usize) -> CheckResult {
    let classes = g.color_classes();
    let max = classes.iter().map(Vec::len).max().unwrap_or(0);
    let name = format!("color-class<={bound}");
    match classes.iter().position(|c| c.len() > bound) {
        Some(i) => CheckResult::new(&name, false, format!("color {} has {} edges", i + 1, classes[i].len())),
        None => CheckResult::new(&name, true, format!("largest class has {max} edges")),
    }
}

fn check_k4_minor_free(g: &ColoredGraph) -> CheckResult {
    if verify_series_parallel(g) {
        CheckResult::new("k4-minor-free", true, "series-parallel reduction empties the graph")
    } else {
        CheckResult::new("k4-minor-free", false, "series-parallel reduction gets stuck")
    }
}

fn bipartite_without(g: &ColoredGraph, removed: usize) -> bool {
    let adj = neighbor_sets(g);
    let mut side: Vec<Option<bool>> = vec![None; g.n() + 1];
    for s in (1..=g.n()).filter(|&v| v != removed) {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(true);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let here = side[v].unwrap();
            for &w in adj[v].iter().filter(|&&w| w != removed) {
                match side[w] {
                    None => {
                        side[w] = Some(!here);
                        stack.push(w);
                    }
                    Some(x) if x == here => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

fn check_oct_one(g: &ColoredGraph, apex: Option<usize>) -> CheckResult {
    let name = "odd-cycle-transversal<=1";
    match apex {
        Some(a) if a >= 1 && a <= g.n() => {
            if bipartite_without(g, a) {
                CheckResult::new(name, true, format!("bipartite without vertex {a}"))
            } else {
                CheckResult::new(name, false, format!("not bipartite without vertex {a}"))
            }
        }
        Some(a) => CheckResult::new(name, false, format!("apex {a} out of range")),
        None => match (1..=g.n()).find(|&v| bipartite_without(g, v)) {
            Some(v) => CheckResult::new(name, true, format!("bipartite without vertex {v}")),
            None => CheckResult::new(name, false, "no single vertex leaves a bipartite graph"),
        },
    }
}

fn check_complete(g: &ColoredGraph) -> CheckResult {
    let adj = neighbor_sets(g);
    match (1..=g.n()).find(|&v| adj[v].len() != g.n() - 1) {
        Some(v) => CheckResult::new(
            "complete",
            false,
            format!("vertex {v} has {} of {} neighbors", adj[v].len(), g.n() - 1),
        ),
        None => CheckResult::new("complete", true, format!("K{}", g.n())),
    }
}

fn check_cliques(g: &ColoredGraph) -> CheckResult {
    let name = "color-classes-are-K2-or-K3";
    for (i, class) in g.color_classes().iter().enumerate() {
        let vertices: BTreeSet<usize> = class
            .iter()
            .flat_map(|&e| [g.edges()[e].u, g.edges()[e].v])
            .collect();
        let pairs: BTreeSet<(usize, usize)> = class.iter().map(|&e| g.edges()[e].pair()).collect();
        let k = vertices.len();
        if !(k == 2 || k == 3) || pairs.len() != class.len() || pairs.len() != k * (k - 1) / 2 {
            return CheckResult::new(
                name,
                false,
                format!("color {} spans {k} vertices with {} edges", i + 1, class.len()),
            );
        }
    }
    CheckResult::new(name, true, format!("{} classes", g.p()))
}

/// Checks the structural properties a graph of the given kind must have.
/// For odd-cycle-transversal graphs, `apex` names the vertex to remove;
/// without it every vertex is tried.
pub fn verify_graph(kind: ReductionKind, g: &ColoredGraph, apex: Option<usize>) -> StructuralReport {
    let checks = match kind {
        ReductionKind::Planar3SatMulti => vec![check_class_size(g, 2), check_k4_minor_free(g)],
        ReductionKind::Planar3SatSimple => {
            vec![check_simple(g), check_class_size(g, 2), check_k4_minor_free(g)]
        }
        ReductionKind::K4MinorFree => vec![
            check_simple(g),
            check_connected(g),
            check_max_degree(g, 3),
            check_class_size(g, 2),
            check_k4_minor_free(g),
        ],
        ReductionKind::OctOne => vec![check_class_size(g, 2), check_oct_one(g, apex)],
        ReductionKind::CompleteEmbed => vec![check_simple(g), check_complete(g)],
        ReductionKind::NaeCliques => vec![check_cliques(g)],
    };
    StructuralReport { kind, checks }
}

/// [`verify_graph`] plus consistency between the graph and its provenance.
pub fn verify_structural(a: &ReductionArtifact) -> StructuralReport {
    let mut report = verify_graph(a.kind, &a.graph, a.apex());
    let g = &a.graph;
    let sized = a.color_meaning.len() == g.p() && a.vertex_meaning.len() == g.n();
    report.checks.push(CheckResult::new(
        "provenance-covers-graph",
        sized,
        format!(
            "{} color and {} vertex records for p = {}, n = {}",
            a.color_meaning.len(),
            a.vertex_meaning.len(),
            g.p(),
            g.n()
        ),
    ));
    if !sized {
        return report;
    }
    let classes = g.color_classes();

    let fresh_bad = a
        .color_meaning
        .iter()
        .enumerate()
        .filter(|(_, r)| **r == ColorRole::Fresh)
        .map(|(i, _)| i)
        .filter(|&i| !(a.kind == ReductionKind::CompleteEmbed && i + 1 == g.p()))
        .find(|&i| classes[i].len() != 1);
    report.checks.push(match fresh_bad {
        Some(i) => CheckResult::new(
            "fresh-colors-single",
            false,
            format!("fresh color {} has {} edges", i + 1, classes[i].len()),
        ),
        None => CheckResult::new("fresh-colors-single", true, "every gadget color is used once"),
    });

    if a.kind.is_sat_based() {
        report.checks.push(check_literal_edges(a));
    } else {
        report.checks.push(check_clause_colors(a));
    }

    let count = |pred: fn(&VertexRole) -> bool| a.vertex_meaning.iter().filter(|r| pred(r)).count();
    let m = a.core.clauses().len();
    let (name, found, expected) = match a.kind {
        ReductionKind::K4MinorFree => (
            "tree-nodes",
            count(|r| matches!(r, VertexRole::Tree { .. })),
            2 * m - 1,
        ),
        ReductionKind::OctOne => ("apex-count", count(|r| *r == VertexRole::Apex), 1),
        ReductionKind::CompleteEmbed => ("added-count", count(|r| *r == VertexRole::Added), 1),
        ReductionKind::NaeCliques => (
            "occurrence-vertices",
            count(|r| matches!(r, VertexRole::Occurrence { .. })),
            3 * m,
        ),
        _ => (
            "corner-vertices",
            count(|r| matches!(r, VertexRole::Corner { .. })),
            3 * m,
        ),
    };
    report.checks.push(CheckResult::new(
        name,
        found == expected,
        format!("{found} found, {expected} expected"),
    ));
    report
}

/// Each literal occurrence carries exactly the pair colors it shares with
/// the opposite occurrences of its variable, and each pair color appears on
/// exactly two edges.
fn check_literal_edges(a: &ReductionArtifact) -> CheckResult {
    let name = "literal-pair-colors";
    let g = &a.graph;
    let classes = g.color_classes();
    for (c, role) in a.color_meaning.iter().enumerate() {
        if matches!(role, ColorRole::Pair { .. }) && classes[c].len() != 2 {
            return CheckResult::new(name, false, format!("pair color {} has {} edges", c + 1, classes[c].len()));
        }
    }
    for (occ, edges) in &a.literal_edge_map {
        let got: BTreeSet<usize> = edges.iter().map(|&i| g.edges()[i].color).collect();
        let want: BTreeSet<usize> = a
            .color_meaning
            .iter()
            .enumerate()
            .filter(|(_, r)| match **r {
                ColorRole::Pair { var, pos, neg } => {
                    var == occ.var && if occ.positive { pos == occ.index } else { neg == occ.index }
                }
                _ => false,
            })
            .map(|(i, _)| i + 1)
            .collect();
        if got != want || edges.len() != want.len() {
            let sign = if occ.positive { "" } else { "-" };
            return CheckResult::new(
                name,
                false,
                format!("occurrence {} of {sign}x{} has colors {got:?}, expected {want:?}", occ.index, occ.var),
            );
        }
    }
    CheckResult::new(name, true, format!("{} literal occurrences", a.literal_edge_map.len()))
}

fn check_clause_colors(a: &ReductionArtifact) -> CheckResult {
    let name = "clause-triangles";
    let g = &a.graph;
    let classes = g.color_classes();
    for j in 1..=a.core.clauses().len() {
        let corners = [3 * j - 2, 3 * j - 1, 3 * j];
        let ok = a.color_meaning[j - 1] == ColorRole::Clause(j)
            && classes[j - 1].iter().all(|&i| {
                let e = g.edges()[i];
                corners.contains(&e.u) && corners.contains(&e.v)
            });
        if !ok {
            return CheckResult::new(name, false, format!("color {j} is not clause {j}'s triangle"));
        }
    }
    CheckResult::new(name, true, format!("{} clause triangles", a.core.clauses().len()))
}
