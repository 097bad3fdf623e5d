use crate::graph::{ColoredGraph, Cut, Edge, GraphError};
use crate::solve::SolveError;

/// A cut carrying at least `ceil(p/2)` colors.
///
/// Keeps the first edge of each color, then places vertices `1..=n` in order,
/// each on the side holding fewer of its already-placed neighbors in that
/// one-edge-per-color subgraph (ties go to S). Every kept edge is decided when
/// its later endpoint is placed, and at least half of those decisions cross.
pub fn greedy_half_colors(g: &ColoredGraph) -> Result<Cut, SolveError> {
    let n = g.n();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n }.into());
    }
    let mut first: Vec<Option<Edge>> = vec![None; g.p()];
    for e in g.edges() {
        first[e.color - 1].get_or_insert(*e);
    }
    let mut adjacency = vec![Vec::new(); n + 1];
    for e in first.into_iter().flatten() {
        adjacency[e.u].push(e.v);
        adjacency[e.v].push(e.u);
    }

    let mut in_s: Vec<Option<bool>> = vec![None; n + 1];
    for v in 1..=n {
        let (mut s, mut t) = (0, 0);
        for &w in &adjacency[v] {
            match in_s[w] {
                Some(true) => s += 1,
                Some(false) => t += 1,
                None => {}
            }
        }
        in_s[v] = Some(s <= t);
    }
    let mut sides: Vec<bool> = in_s[1..].iter().map(|b| b.unwrap()).collect();
    if sides.iter().all(|&b| b) {
        sides[n - 1] = false;
    }
    Ok(Cut::new(sides)?)
}
