use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::graph::{ColoredGraph, Cut, GraphError};
use crate::solve::{Method, SolveError, SolveResult, DEFAULT_BRUTE_FORCE_CAP};

/// Hard ceiling on the enumeration width (masks are `u64`).
const MAX_CAP: usize = 63;
const CHUNK: u64 = 1 << 12;

/// Per-color lists of edge bit masks. Vertex 1 is pinned to S and carries no
/// bit; vertex `v >= 2` owns bit `v - 2` of the T-side mask.
struct Evaluator {
    classes: Vec<Vec<(u64, u64)>>,
}

impl Evaluator {
    fn new(g: &ColoredGraph) -> Self {
        let bit = |v: usize| if v == 1 { 0 } else { 1u64 << (v - 2) };
        let mut classes = vec![Vec::new(); g.p()];
        for e in g.dedup().edges() {
            classes[e.color - 1].push((bit(e.u), bit(e.v)));
        }
        Evaluator { classes }
    }

    fn colors(&self, mask: u64) -> usize {
        self.classes
            .iter()
            .filter(|class| {
                class
                    .iter()
                    .any(|&(bu, bv)| (mask & bu != 0) != (mask & bv != 0))
            })
            .count()
    }
}

fn mask_to_cut(n: usize, mask: u64) -> Cut {
    let in_s = (1..=n)
        .map(|v| v == 1 || mask >> (v - 2) & 1 == 0)
        .collect();
    Cut::new(in_s).expect("nonzero mask with vertex 1 pinned is nontrivial")
}

/// Exact maximum colored cut with the default vertex cap.
pub fn brute_force_max(g: &ColoredGraph) -> Result<SolveResult, SolveError> {
    brute_force_max_with_cap(g, DEFAULT_BRUTE_FORCE_CAP)
}

/// Enumerates the `2^(n-1) - 1` nontrivial bipartitions with vertex 1 in S,
/// in increasing order of the T-side mask, and returns the first one with
/// the most colors. Work is spread over threads, but value, witness, and
/// `explored` match a sequential scan exactly.
pub fn brute_force_max_with_cap(g: &ColoredGraph, cap: usize) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n }.into());
    }
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(SolveError::CapExceeded { n, cap });
    }
    let eval = Evaluator::new(g);
    let p = g.p();
    let last = (1u64 << (n - 1)) - 1;
    let chunks = last.div_ceil(CHUNK);

    // Smallest mask reaching all p colors, once some worker has found one.
    let full_at = AtomicU64::new(u64::MAX);
    let best = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK + 1;
            let end = (start + CHUNK - 1).min(last);
            let mut best = (0usize, u64::MAX);
            if start > full_at.load(Ordering::Relaxed) {
                return best;
            }
            for mask in start..=end {
                let value = eval.colors(mask);
                if value > best.0 || best.1 == u64::MAX {
                    best = (value, mask);
                }
                if value == p {
                    full_at.fetch_min(mask, Ordering::Relaxed);
                    break;
                }
            }
            best
        })
        .reduce(
            || (0, u64::MAX),
            |a, b| match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Less => b,
                std::cmp::Ordering::Equal => (a.0, a.1.min(b.1)),
            },
        );

    let (value, mask) = best;
    let explored = if value == p { mask } else { last };
    Ok(SolveResult {
        value,
        witness: mask_to_cut(n, mask),
        method: Method::BruteForce,
        explored,
    })
}
