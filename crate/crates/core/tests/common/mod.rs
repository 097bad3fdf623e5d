//! Independent oracles and seeded instance generators shared by the
//! integration tests. Nothing here calls the solvers under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use colorcut::{CnfFormula, ColoredGraph, Edge};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Colors cut by the placement `in_s` (index `v - 1`), computed edge by edge.
pub fn colors_cut(g: &ColoredGraph, in_s: &[bool]) -> usize {
    g.edges()
        .iter()
        .filter(|e| in_s[e.u - 1] != in_s[e.v - 1])
        .map(|e| e.color)
        .collect::<BTreeSet<_>>()
        .len()
}

/// Maximum colored cut over every nontrivial subset, without pinning.
/// Returns 0 for graphs with fewer than two vertices.
pub fn oracle_max(g: &ColoredGraph) -> usize {
    let n = g.n();
    if n < 2 {
        return 0;
    }
    assert!(n <= 20, "oracle is exhaustive");
    let mut best = 0;
    for mask in 1u32..(1 << n) - 1 {
        let in_s: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
        best = best.max(colors_cut(g, &in_s));
        if best == g.p() {
            break;
        }
    }
    best
}

pub fn oracle_colorful(g: &ColoredGraph) -> bool {
    g.n() >= 2 && oracle_max(g) == g.p()
}

/// Whether some assignment satisfies every clause (`nae = false`) or puts
/// a true and a false literal in every clause (`nae = true`).
pub fn oracle_sat(f: &CnfFormula, nae: bool) -> bool {
    let n = f.var_count();
    (0u32..1 << n).any(|bits| {
        f.clauses().iter().all(|c| {
            let vals: Vec<bool> = c
                .iter()
                .map(|l| (bits >> (l.var() - 1) & 1 == 1) == l.is_positive())
                .collect();
            let any_true = vals.iter().any(|&b| b);
            if nae {
                any_true && vals.iter().any(|&b| !b)
            } else {
                any_true
            }
        })
    })
}

/// Random graph on `n` vertices using every color in `1..=p`. Simple
/// graphs draw distinct pairs; otherwise pairs may repeat.
pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: usize, m: usize, simple: bool) -> ColoredGraph {
    let mut pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(r);
    let m = if simple { m.min(pairs.len()) } else { m };
    assert!(m >= p, "need one edge per color");
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let (u, v) = if simple {
            pairs[i]
        } else {
            pairs[r.gen_range(0..pairs.len())]
        };
        let color = if i < p { i + 1 } else { r.gen_range(1..=p) };
        edges.push(Edge::new(u, v, color));
    }
    edges.shuffle(r);
    ColoredGraph::new(n, p, edges).unwrap()
}

/// Random simple graph whose color 1 spans more than `p(p-1)` distinct
/// pairs. Needs `n(n-1)/2 > p(p-1) + p - 1`.
pub fn inflated_graph(r: &mut ChaCha8Rng, n: usize, p: usize) -> ColoredGraph {
    let total = n * (n - 1) / 2;
    let big = p * (p - 1) + 1;
    assert!(total >= big + p - 1, "not enough pairs");
    let mut pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(r);
    let extra = r.gen_range(0..=(total - big - (p - 1)).min(6));
    let mut edges = Vec::new();
    let mut it = pairs.into_iter();
    for _ in 0..big {
        let (u, v) = it.next().unwrap();
        edges.push(Edge::new(u, v, 1));
    }
    for c in 2..=p {
        let (u, v) = it.next().unwrap();
        edges.push(Edge::new(u, v, c));
    }
    for _ in 0..extra {
        let (u, v) = it.next().unwrap();
        edges.push(Edge::new(u, v, r.gen_range(1..=p)));
    }
    edges.shuffle(r);
    ColoredGraph::new(n, p, edges).unwrap()
}

pub fn random_3cnf(r: &mut ChaCha8Rng, vars: usize, clauses: usize) -> CnfFormula {
    let cs: Vec<Vec<i32>> = (0..clauses)
        .map(|_| {
            (0..3)
                .map(|_| {
                    let v = r.gen_range(1..=vars) as i32;
                    if r.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i32]> = cs.iter().map(Vec::as_slice).collect();
    CnfFormula::from_dimacs_clauses(vars, &refs).unwrap()
}

/// Every 3-literal clause over `vars` variables as a sorted multiset of literals.
pub fn all_clauses(vars: usize) -> Vec<Vec<i32>> {
    let lits: Vec<i32> = (1..=vars as i32).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    for a in 0..lits.len() {
        for b in a..lits.len() {
            for c in b..lits.len() {
                out.push(vec![lits[a], lits[b], lits[c]]);
            }
        }
    }
    out
}

/// Every formula of 1 to `max_clauses` clauses over `vars` variables, as a
/// multiset of clauses from [`all_clauses`].
pub fn all_formulas(vars: usize, max_clauses: usize) -> Vec<CnfFormula> {
    let clauses = all_clauses(vars);
    let mut out = Vec::new();
    let mut idx = Vec::new();
    fn rec(
        start: usize,
        left: usize,
        idx: &mut Vec<usize>,
        clauses: &[Vec<i32>],
        vars: usize,
        out: &mut Vec<CnfFormula>,
    ) {
        if !idx.is_empty() {
            let refs: Vec<&[i32]> = idx.iter().map(|&i| clauses[i].as_slice()).collect();
            out.push(CnfFormula::from_dimacs_clauses(vars, &refs).unwrap());
        }
        if left == 0 {
            return;
        }
        for i in start..clauses.len() {
            idx.push(i);
            rec(i, left - 1, idx, clauses, vars, out);
            idx.pop();
        }
    }
    rec(0, max_clauses, &mut idx, &clauses, vars, &mut out);
    out
}
