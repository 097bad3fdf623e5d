//! Seeded instance generators shared by the benchmarks.

use colorcut::{ColoredGraph, Edge};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random simple graph on `n` vertices with `m` edges and colors `1..=p`,
/// every color used at least once. Requires `p <= m <= n(n-1)/2`.
pub fn random_graph(seed: u64, n: usize, m: usize, p: usize) -> ColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let edges = pairs
        .into_iter()
        .take(m)
        .enumerate()
        .map(|(i, (u, v))| {
            let color = if i < p { i + 1 } else { rng.gen_range(1..=p) };
            Edge::new(u, v, color)
        })
        .collect();
    ColoredGraph::new(n, p, edges).expect("generator respects the graph invariants")
}
