//! Sidecar text describing where every color and vertex of a generated
//! graph comes from. One record per line, colors first, all ids 1-based:
//!
//! ```text
//! color 1 pair <var> <pos> <neg>
//! color 7 clause <j>
//! color 8 fresh
//! vertex 1 corner <clause> <corner>
//! vertex 9 path <edge> <end>
//! vertex 10 copy <v> | link <v> | tree <node> | apex
//! vertex 11 occurrence <clause> <position> | a <var> | b <var> | added
//! ```

use std::fmt::Write;

use crate::io::{content_lines, parse_usize, ParseError};
use crate::reductions::{ColorRole, VertexRole};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub colors: Vec<ColorRole>,
    pub vertices: Vec<VertexRole>,
}

pub fn serialize_provenance(p: &Provenance) -> String {
    let mut out = String::new();
    for (i, role) in p.colors.iter().enumerate() {
        let id = i + 1;
        let _ = match *role {
            ColorRole::Pair { var, pos, neg } => writeln!(out, "color {id} pair {var} {pos} {neg}"),
            ColorRole::Clause(j) => writeln!(out, "color {id} clause {j}"),
            ColorRole::Fresh => writeln!(out, "color {id} fresh"),
        };
    }
    for (i, role) in p.vertices.iter().enumerate() {
        let id = i + 1;
        let body = match *role {
            VertexRole::Corner { clause, corner } => format!("corner {clause} {corner}"),
            VertexRole::PathNode { edge, end } => format!("path {edge} {end}"),
            VertexRole::Copy { of } => format!("copy {of}"),
            VertexRole::Link { of } => format!("link {of}"),
            VertexRole::Tree { node } => format!("tree {node}"),
            VertexRole::Apex => "apex".to_string(),
            VertexRole::Occurrence { clause, position } => format!("occurrence {clause} {position}"),
            VertexRole::PositiveHub { var } => format!("a {var}"),
            VertexRole::NegativeHub { var } => format!("b {var}"),
            VertexRole::Added => "added".to_string(),
        };
        let _ = writeln!(out, "vertex {id} {body}");
    }
    out
}

pub fn parse_provenance(text: &str) -> Result<Provenance, ParseError> {
    let mut colors = Vec::new();
    let mut vertices = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let err = |m: &str| ParseError::new(line, m);
        let num = |i: usize| -> Result<usize, ParseError> {
            let tok = tokens.get(i).ok_or_else(|| err("missing field"))?;
            parse_usize(line, tok, "id")
        };
        let (kind, rest) = match tokens.as_slice() {
            [kind, _, rest @ ..] => (*kind, rest),
            _ => return Err(err("expected `color <id> ...` or `vertex <id> ...`")),
        };
        let id = num(1)?;
        let (table_len, name) = match kind {
            "color" => (colors.len(), "color"),
            "vertex" => (vertices.len(), "vertex"),
            other => return Err(err(&format!("unknown record `{other}`"))),
        };
        if id != table_len + 1 {
            return Err(err(&format!("{name} ids must be consecutive from 1; expected {}", table_len + 1)));
        }
        let arity = |want: usize| {
            if rest.len() == want + 1 {
                Ok(())
            } else {
                Err(err(&format!("`{}` takes {want} fields", rest[0])))
            }
        };
        let tag = rest.first().copied().ok_or_else(|| err("missing role"))?;
        if kind == "color" {
            let role = match tag {
                "pair" => {
                    arity(3)?;
                    ColorRole::Pair { var: num(3)?, pos: num(4)?, neg: num(5)? }
                }
                "clause" => {
                    arity(1)?;
                    ColorRole::Clause(num(3)?)
                }
                "fresh" => {
                    arity(0)?;
                    ColorRole::Fresh
                }
                other => return Err(err(&format!("unknown color role `{other}`"))),
            };
            colors.push(role);
        } else {
            let role = match tag {
                "corner" => {
                    arity(2)?;
                    VertexRole::Corner { clause: num(3)?, corner: num(4)? }
                }
                "path" => {
                    arity(2)?;
                    VertexRole::PathNode { edge: num(3)?, end: num(4)? }
                }
                "copy" => {
                    arity(1)?;
                    VertexRole::Copy { of: num(3)? }
                }
                "link" => {
                    arity(1)?;
                    VertexRole::Link { of: num(3)? }
                }
                "tree" => {
                    arity(1)?;
                    VertexRole::Tree { node: num(3)? }
                }
                "apex" => {
                    arity(0)?;
                    VertexRole::Apex
                }
                "occurrence" => {
                    arity(2)?;
                    VertexRole::Occurrence { clause: num(3)?, position: num(4)? }
                }
                "a" => {
                    arity(1)?;
                    VertexRole::PositiveHub { var: num(3)? }
                }
                "b" => {
                    arity(1)?;
                    VertexRole::NegativeHub { var: num(3)? }
                }
                "added" => {
                    arity(0)?;
                    VertexRole::Added
                }
                other => return Err(err(&format!("unknown vertex role `{other}`"))),
            };
            vertices.push(role);
        }
    }
    Ok(Provenance { colors, vertices })
}
