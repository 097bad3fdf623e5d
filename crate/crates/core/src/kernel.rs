//! Kernelization of MAXIMUM COLORED CUT by color-class removal.
//!
//! If a color class spans more than `2·C(p, 2)` distinct vertex pairs, that
//! color crosses every maximum colored cut: take an optimal cut, keep one
//! crossing edge per crossing color, and some edge of the large class has an
//! endpoint outside that witness; moving it would gain a color. Such classes
//! are deleted and the parameter drops by one. Applied exhaustively, every
//! remaining class spans at most `2·C(p', 2)` pairs, for `O(p'^3)` in total.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{ColoredGraph, Cut, Edge, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("the cost parameter k must be at least 1")]
    InvalidK,
}

/// `2·C(beta, 2)`: the most same-side pairs a bipartite graph with `beta`
/// edges and no isolated vertices can have.
pub fn claim1_bound(beta: usize) -> usize {
    beta * beta.saturating_sub(1)
}

/// Distinct-pair count of every color, indexed by `color - 1`.
fn pair_counts(g: &ColoredGraph) -> Vec<usize> {
    let triples: BTreeSet<(usize, (usize, usize))> =
        g.edges().iter().map(|e| (e.color, e.pair())).collect();
    let mut counts = vec![0; g.p()];
    for (c, _) in triples {
        counts[c - 1] += 1;
    }
    counts
}

/// Smallest color whose class spans more than `claim1_bound(p)` distinct pairs.
pub fn rule_star_find(g: &ColoredGraph) -> Option<usize> {
    let bound = claim1_bound(g.p());
    pair_counts(g)
        .iter()
        .position(|&count| count > bound)
        .map(|i| i + 1)
}

/// One application of the rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleStep {
    /// The graph the rule fired on.
    pub before: ColoredGraph,
    /// Removed color, numbered as in `before`.
    pub color: usize,
    /// Removed color, numbered as in the input graph.
    pub original_color: usize,
    /// `vertex_map[v - 1]` is the image of `before`'s vertex `v`, or `None`
    /// if the removal left it isolated.
    pub vertex_map: Vec<Option<usize>>,
}

/// Deletes the class of `color`, renumbers the remaining colors densely, and
/// drops vertices that lose their last edge.
fn remove_color(g: &ColoredGraph, color: usize) -> (ColoredGraph, Vec<Option<usize>>) {
    let before = g.degrees();
    let kept: Vec<Edge> = g.edges().iter().filter(|e| e.color != color).copied().collect();
    let mut after = vec![0usize; g.n()];
    for e in &kept {
        after[e.u - 1] += 1;
        after[e.v - 1] += 1;
    }
    let mut vertex_map = vec![None; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if before[v] == 0 || after[v] > 0 {
            next += 1;
            vertex_map[v] = Some(next);
        }
    }
    let edges = kept
        .into_iter()
        .map(|e| {
            Edge::new(
                vertex_map[e.u - 1].unwrap(),
                vertex_map[e.v - 1].unwrap(),
                if e.color > color { e.color - 1 } else { e.color },
            )
        })
        .collect();
    let reduced =
        ColoredGraph::new(next, g.p() - 1, edges).expect("color removal keeps colors live");
    (reduced, vertex_map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The cost threshold is already guaranteed; no further search needed.
    EarlyYes,
    Reduced,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelOutcome {
    pub verdict: Verdict,
    /// Original identifiers of the removed colors, in removal order.
    pub removed_colors: Vec<usize>,
    /// Cost parameter after one decrement per removed color (k-parameterized
    /// runs only).
    pub remaining_k: Option<usize>,
    /// `color_renaming[c - 1]`: image of original color `c` in the final graph.
    pub color_renaming: Vec<Option<usize>>,
    /// `vertex_renaming[v - 1]`: image of original vertex `v` in the final graph.
    pub vertex_renaming: Vec<Option<usize>>,
    /// Deduplicated input graph.
    pub input: ColoredGraph,
    /// Graph at the point where the rule stopped firing (or where the early
    /// answer was found).
    pub last: ColoredGraph,
    pub steps: Vec<RuleStep>,
}

impl KernelOutcome {
    /// The kernel, present for `Verdict::Reduced` only.
    pub fn reduced_graph(&self) -> Option<&ColoredGraph> {
        match self.verdict {
            Verdict::Reduced => Some(&self.last),
            Verdict::EarlyYes => None,
        }
    }

    /// Lifts a cut of [`KernelOutcome::last`] to the input graph so that
    /// every removed color crosses; the result has at least
    /// `|colors of cut| + removed` colors. With `None`, lifting starts from
    /// the all-S placement, which needs at least one rule step.
    pub fn lift(&self, cut: Option<&Cut>) -> Result<Cut, GraphError> {
        let mut sides = match cut {
            Some(c) => {
                if c.n() != self.last.n() {
                    return Err(GraphError::CutSizeMismatch {
                        cut: c.n(),
                        graph: self.last.n(),
                    });
                }
                c.sides().to_vec()
            }
            None => vec![true; self.last.n()],
        };
        for step in self.steps.iter().rev() {
            let mut up: Vec<bool> = step
                .vertex_map
                .iter()
                .map(|img| img.map_or(true, |w| sides[w - 1]))
                .collect();
            force_color_across(&step.before, step.color, &mut up);
            sides = up;
        }
        Cut::new(sides)
    }
}

/// Makes `color` cross while keeping every color in a one-edge-per-color
/// witness of the current cut. Requires `color` to span more than
/// `claim1_bound(p)` distinct pairs.
fn force_color_across(g: &ColoredGraph, color: usize, sides: &mut [bool]) {
    let crosses = |e: &Edge, s: &[bool]| s[e.u - 1] != s[e.v - 1];
    if g.edges().iter().any(|e| e.color == color && crosses(e, sides)) {
        return;
    }
    let mut seen = vec![false; g.p()];
    let mut witness = vec![false; g.n()];
    for e in g.edges().iter().filter(|e| crosses(e, sides)) {
        if !seen[e.color - 1] {
            seen[e.color - 1] = true;
            witness[e.u - 1] = true;
            witness[e.v - 1] = true;
        }
    }
    let free = g
        .edges()
        .iter()
        .filter(|e| e.color == color)
        .find_map(|e| [e.u, e.v].into_iter().find(|&x| !witness[x - 1]))
        .expect("a class above the bound always has an endpoint outside the witness");
    sides[free - 1] = !sides[free - 1];
}

struct Kernelizer {
    input: ColoredGraph,
    current: ColoredGraph,
    steps: Vec<RuleStep>,
    color_names: Vec<usize>,
    vertex_renaming: Vec<Option<usize>>,
}

impl Kernelizer {
    fn new(g: &ColoredGraph) -> Self {
        let input = g.dedup();
        Kernelizer {
            current: input.clone(),
            color_names: (1..=input.p()).collect(),
            vertex_renaming: (1..=input.n()).map(Some).collect(),
            steps: Vec::new(),
            input,
        }
    }

    fn apply(&mut self, color: usize) {
        let (next, vertex_map) = remove_color(&self.current, color);
        let original_color = self.color_names.remove(color - 1);
        for img in self.vertex_renaming.iter_mut() {
            *img = img.and_then(|v| vertex_map[v - 1]);
        }
        let before = std::mem::replace(&mut self.current, next);
        self.steps.push(RuleStep {
            before,
            color,
            original_color,
            vertex_map,
        });
    }

    fn finish(self, verdict: Verdict, remaining_k: Option<usize>) -> KernelOutcome {
        let mut color_renaming = vec![None; self.input.p()];
        for (reduced, &orig) in self.color_names.iter().enumerate() {
            color_renaming[orig - 1] = Some(reduced + 1);
        }
        KernelOutcome {
            verdict,
            removed_colors: self.steps.iter().map(|s| s.original_color).collect(),
            remaining_k,
            color_renaming,
            vertex_renaming: self.vertex_renaming,
            input: self.input,
            last: self.current,
            steps: self.steps,
        }
    }
}

/// Exhaustive application of the rule, parameterized by the number of colors.
pub fn kernelize_colors(g: &ColoredGraph) -> KernelOutcome {
    let mut k = Kernelizer::new(g);
    while let Some(color) = rule_star_find(&k.current) {
        k.apply(color);
    }
    k.finish(Verdict::Reduced, None)
}

/// Kernelization parameterized by the cost `k`. Answers early once
/// `k' <= ceil(p'/2)`, since a cut with that many colors always exists;
/// otherwise `p' < 2k'` and the kernel has `O(k^3)` distinct pairs.
pub fn kernelize_value(g: &ColoredGraph, k: usize) -> Result<KernelOutcome, KernelError> {
    if k == 0 {
        return Err(KernelError::InvalidK);
    }
    let mut kz = Kernelizer::new(g);
    let mut k = k;
    loop {
        if k <= kz.current.p().div_ceil(2) {
            return Ok(kz.finish(Verdict::EarlyYes, Some(k)));
        }
        match rule_star_find(&kz.current) {
            Some(color) => {
                kz.apply(color);
                k -= 1;
            }
            None => return Ok(kz.finish(Verdict::Reduced, Some(k))),
        }
    }
}
