//! Line-oriented text formats for graphs and cuts.
//!
//! ECG graph files:
//!
//! ```text
//! c optional comment lines
//! p ecg <n> <m> <p>
//! e <u> <v> <color>      (exactly m lines)
//! ```
//!
//! Cut files hold a single line `s <v1> <v2> ... <vk>` listing the S side in
//! increasing order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{ColoredGraph, Cut, Edge, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !(*l == "c" || l.starts_with("c ") || l.starts_with("c\t")))
}

pub(crate) fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("{what}: expected a non-negative integer, got `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing `p ecg <n> <m> <p>` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "p" || toks[1] != "ecg" {
        return Err(ParseError::new(
            header_line,
            format!("malformed header `{header}`, expected `p ecg <n> <m> <p>`"),
        ));
    }
    let n = parse_usize(header_line, toks[2], "vertex count")?;
    let m = parse_usize(header_line, toks[3], "edge count")?;
    let p = parse_usize(header_line, toks[4], "color count")?;

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 4 || toks[0] != "e" {
            return Err(ParseError::new(
                line,
                format!("malformed edge line `{body}`, expected `e <u> <v> <color>`"),
            ));
        }
        if edges.len() == m {
            return Err(ParseError::new(line, format!("more than the declared {m} edges")));
        }
        let u = parse_usize(line, toks[1], "endpoint")?;
        let v = parse_usize(line, toks[2], "endpoint")?;
        let c = parse_usize(line, toks[3], "color")?;
        edges.push(Edge::new(u, v, c));
        edge_lines.push(line);
    }
    if edges.len() != m {
        return Err(ParseError::new(
            edge_lines.last().copied().unwrap_or(header_line),
            format!("header declares {m} edges but {} were found", edges.len()),
        ));
    }
    ColoredGraph::new(n, p, edges).map_err(|e| {
        let line = match e {
            GraphError::VertexOutOfRange { index, .. }
            | GraphError::ColorOutOfRange { index, .. }
            | GraphError::SelfLoop { index, .. } => edge_lines[index],
            _ => header_line,
        };
        ParseError::new(line, e.to_string())
    })
}

pub fn serialize_graph(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p ecg {} {} {}", g.n(), g.m(), g.p()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u, e.v, e.color).unwrap();
    }
    out
}

/// Parses a cut file against a graph with `n` vertices.
pub fn parse_cut(text: &str, n: usize) -> Result<Cut, ParseError> {
    let mut lines = content_lines(text);
    let (line, body) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "missing `s ...` cut line"))?;
    let mut toks = body.split_whitespace();
    if toks.next() != Some("s") {
        return Err(ParseError::new(line, format!("malformed cut line `{body}`")));
    }
    let mut s_side = Vec::new();
    for tok in toks {
        let v = parse_usize(line, tok, "vertex")?;
        if s_side.last().is_some_and(|&last| v <= last) {
            return Err(ParseError::new(line, "cut vertices must be strictly increasing"));
        }
        s_side.push(v);
    }
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::new(extra, "unexpected content after the cut line"));
    }
    Cut::from_s_side(n, &s_side).map_err(|e| ParseError::new(line, e.to_string()))
}

pub fn serialize_cut(cut: &Cut) -> String {
    let mut out = String::from("s");
    for v in cut.s_side() {
        write!(out, " {v}").unwrap();
    }
    out.push('\n');
    out
}
