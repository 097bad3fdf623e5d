//! Edge-colored multigraphs, nontrivial cuts, and the color sets they induce.
//!
//! Vertices are `1..=n` and colors `1..=p`. Every declared color must be
//! carried by at least one edge, so `p == 0` exactly when there are no edges.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("edge {index}: color {color} outside 1..={p}")]
    ColorOutOfRange { index: usize, color: usize, p: usize },
    #[error("edge {index}: self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("color {color} is declared but carried by no edge")]
    DeadColor { color: usize },
    #[error("color {color} outside 1..={p}")]
    NoSuchColor { color: usize, p: usize },
    #[error("{n} vertices admit no nontrivial cut")]
    TooFewVertices { n: usize },
    #[error("cut is trivial: one side is empty")]
    TrivialCut,
    #[error("cut vertex {vertex} outside 1..={n}")]
    CutVertexOutOfRange { vertex: usize, n: usize },
    #[error("cut covers {cut} vertices but the graph has {graph}")]
    CutSizeMismatch { cut: usize, graph: usize },
}

/// An undirected colored edge. Endpoint order is preserved as given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub color: usize,
}

impl Edge {
    pub fn new(u: usize, v: usize, color: usize) -> Self {
        Edge { u, v, color }
    }

    /// Endpoints as an unordered pair `(min, max)`.
    pub fn pair(&self) -> (usize, usize) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// A set of color identifiers drawn from `1..=p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorSet {
    p: usize,
    words: Vec<u64>,
}

impl ColorSet {
    pub fn new(p: usize) -> Self {
        ColorSet {
            p,
            words: vec![0; p.div_ceil(64)],
        }
    }

    pub fn universe(&self) -> usize {
        self.p
    }

    /// Inserts `color`; returns true if it was not already present.
    pub fn insert(&mut self, color: usize) -> bool {
        assert!(
            (1..=self.p).contains(&color),
            "color {color} outside 1..={}",
            self.p
        );
        let (w, b) = ((color - 1) / 64, (color - 1) % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, color: usize) -> bool {
        if color == 0 || color > self.p {
            return false;
        }
        let (w, b) = ((color - 1) / 64, (color - 1) % 64);
        self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.p
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.p).filter(move |&c| self.contains(c))
    }
}

/// A nontrivial bipartition `(S, V \ S)` of the vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    in_s: Vec<bool>,
}

impl Cut {
    /// `in_s[v - 1]` says whether vertex `v` lies on the S side.
    pub fn new(in_s: Vec<bool>) -> Result<Self, GraphError> {
        if in_s.len() < 2 {
            return Err(GraphError::TooFewVertices { n: in_s.len() });
        }
        let s = in_s.iter().filter(|&&b| b).count();
        if s == 0 || s == in_s.len() {
            return Err(GraphError::TrivialCut);
        }
        Ok(Cut { in_s })
    }

    /// Builds the cut whose S side is exactly `s_side`.
    pub fn from_s_side(n: usize, s_side: &[usize]) -> Result<Self, GraphError> {
        let mut in_s = vec![false; n];
        for &v in s_side {
            if v == 0 || v > n {
                return Err(GraphError::CutVertexOutOfRange { vertex: v, n });
            }
            in_s[v - 1] = true;
        }
        Cut::new(in_s)
    }

    pub fn n(&self) -> usize {
        self.in_s.len()
    }

    pub fn in_s(&self, v: usize) -> bool {
        self.in_s[v - 1]
    }

    pub fn sides(&self) -> &[bool] {
        &self.in_s
    }

    pub fn s_side(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.in_s(v)).collect()
    }

    pub fn complement(&self) -> Cut {
        Cut {
            in_s: self.in_s.iter().map(|b| !b).collect(),
        }
    }

    pub fn separates(&self, e: &Edge) -> bool {
        self.in_s(e.u) != self.in_s(e.v)
    }
}

/// An edge-colored multigraph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    n: usize,
    p: usize,
    edges: Vec<Edge>,
}

impl ColoredGraph {
    /// Validates ranges, self-loops and that every color `1..=p` is live.
    pub fn new(n: usize, p: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut live = vec![false; p];
        for (index, e) in edges.iter().enumerate() {
            for vertex in [e.u, e.v] {
                if vertex == 0 || vertex > n {
                    return Err(GraphError::VertexOutOfRange { index, vertex, n });
                }
            }
            if e.u == e.v {
                return Err(GraphError::SelfLoop { index, vertex: e.u });
            }
            if e.color == 0 || e.color > p {
                return Err(GraphError::ColorOutOfRange {
                    index,
                    color: e.color,
                    p,
                });
            }
            live[e.color - 1] = true;
        }
        if let Some(dead) = live.iter().position(|&l| !l) {
            return Err(GraphError::DeadColor { color: dead + 1 });
        }
        Ok(ColoredGraph { n, p, edges })
    }

    /// Like [`ColoredGraph::new`] with `p` taken as the largest color used.
    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let p = edges.iter().map(|e| e.color).max().unwrap_or(0);
        ColoredGraph::new(n, p, edges)
    }

    pub fn edgeless(n: usize) -> Self {
        ColoredGraph {
            n,
            p: 0,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    fn check_color(&self, color: usize) -> Result<(), GraphError> {
        if color == 0 || color > self.p {
            Err(GraphError::NoSuchColor { color, p: self.p })
        } else {
            Ok(())
        }
    }

    /// Edge indices grouped by color; entry `i` holds color `i + 1`.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.p];
        for (i, e) in self.edges.iter().enumerate() {
            classes[e.color - 1].push(i);
        }
        classes
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u - 1] += 1;
            deg[e.v - 1] += 1;
        }
        deg
    }

    /// True if no two edges join the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.pair()))
    }

    /// Drops repeated `({u, v}, color)` triples, keeping the first of each.
    pub fn dedup(&self) -> ColoredGraph {
        let mut seen = BTreeSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert((e.pair(), e.color)))
            .copied()
            .collect();
        ColoredGraph {
            n: self.n,
            p: self.p,
            edges,
        }
    }

    /// Number of connected components of the subgraph formed by the edges
    /// of `color`, not counting vertices that carry no such edge.
    pub fn color_span(&self, color: usize) -> Result<usize, GraphError> {
        self.check_color(color)?;
        let mut dsu = DisjointSets::new(self.n + 1);
        let mut touched = BTreeSet::new();
        for e in self.edges.iter().filter(|e| e.color == color) {
            dsu.union(e.u, e.v);
            touched.insert(e.u);
            touched.insert(e.v);
        }
        let roots: BTreeSet<_> = touched.into_iter().map(|v| dsu.find(v)).collect();
        Ok(roots.len())
    }

    /// Number of distinct unordered vertex pairs carrying an edge of `color`.
    pub fn distinct_pairs_of_color(&self, color: usize) -> Result<usize, GraphError> {
        self.check_color(color)?;
        Ok(distinct_pairs_in(&self.edges, color))
    }

    fn check_cut(&self, cut: &Cut) -> Result<(), GraphError> {
        if cut.n() != self.n {
            return Err(GraphError::CutSizeMismatch {
                cut: cut.n(),
                graph: self.n,
            });
        }
        Ok(())
    }

    /// Indices of the edges whose endpoints lie on opposite sides.
    pub fn cut_edges(&self, cut: &Cut) -> Result<Vec<usize>, GraphError> {
        self.check_cut(cut)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| cut.separates(e))
            .map(|(i, _)| i)
            .collect())
    }

    pub fn cut_colors(&self, cut: &Cut) -> Result<ColorSet, GraphError> {
        self.check_cut(cut)?;
        let mut set = ColorSet::new(self.p);
        for e in self.edges.iter().filter(|e| cut.separates(e)) {
            set.insert(e.color);
        }
        Ok(set)
    }

    pub fn is_colorful(&self, cut: &Cut) -> Result<bool, GraphError> {
        Ok(self.cut_colors(cut)?.is_full())
    }
}

/// Distinct-pair count of `color` over an arbitrary edge slice; zero when
/// the color does not occur.
pub fn distinct_pairs_in(edges: &[Edge], color: usize) -> usize {
    edges
        .iter()
        .filter(|e| e.color == color)
        .map(Edge::pair)
        .collect::<BTreeSet<_>>()
        .len()
}

/// Union-find with path halving.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(size: usize) -> Self {
        DisjointSets {
            parent: (0..size).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
