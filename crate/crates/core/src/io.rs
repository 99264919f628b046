//! Graph file formats.
//!
//! * JSON: `{"n": 6, "one_indexed": true, "edges": [[1, 2, -1], ...]}` with an
//!   optional free-text `"comment"` field.
//! * Plain matrix: `n` lines of `n` space-separated values in `{-1, 0, 1}`.
//! * DOT (export only): undirected, positive edges solid blue, negative
//!   edges dashed red.
//!
//! Emitters are deterministic: edges in lexicographic order, no timestamps.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Matrix,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "matrix" => Ok(Format::Matrix),
            "dot" => Ok(Format::Dot),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    comment: Option<String>,
    n: usize,
    #[serde(default)]
    one_indexed: bool,
    edges: Vec<(i64, i64, i64)>,
}

pub fn parse_json(text: &str) -> Result<SignedGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let offset = i64::from(file.one_indexed);
    let mut edges = Vec::with_capacity(file.edges.len());
    for &(u, v, s) in &file.edges {
        let u = u - offset;
        let v = v - offset;
        if u < 0 || v < 0 {
            return Err(Error::VertexOutOfRange {
                vertex: u.min(v).unsigned_abs() as usize,
                n: file.n,
            });
        }
        edges.push((u as usize, v as usize, s));
    }
    SignedGraph::from_edge_list(file.n, &edges)
}

/// Deterministic JSON rendering, one edge per line.
pub fn to_json(g: &SignedGraph, one_indexed: bool) -> String {
    let offset = usize::from(one_indexed);
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"n\": {},", g.order());
    let _ = writeln!(out, "  \"one_indexed\": {one_indexed},");
    let edges = g.edges();
    if edges.is_empty() {
        let _ = writeln!(out, "  \"edges\": []");
    } else {
        let _ = writeln!(out, "  \"edges\": [");
        for (i, (u, v, s)) in edges.iter().enumerate() {
            let sep = if i + 1 == edges.len() { "" } else { "," };
            let _ = writeln!(out, "    [{}, {}, {}]{sep}", u + offset, v + offset, s);
        }
        let _ = writeln!(out, "  ]");
    }
    out.push_str("}\n");
    out
}

pub fn parse_matrix(text: &str) -> Result<SignedGraph> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 0;
        for token in line.split_whitespace() {
            // 1-based character column of the token
            let column = line[col..].find(token).map_or(col, |p| col + p) + 1;
            col = column - 1 + token.len();
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                column,
                message: format!("expected an integer, found '{token}'"),
            })?;
            if !(-1..=1).contains(&value) {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column,
                    message: format!("entry {value} is outside {{-1, 0, 1}}"),
                });
            }
            row.push(value);
        }
        rows.push((lineno + 1, row));
    }
    let n = rows.len();
    if let Some((line, row)) = rows.iter().find(|(_, r)| r.len() != n) {
        return Err(Error::Parse {
            line: *line,
            column: 1,
            message: format!("row has {} entries, expected {n}", row.len()),
        });
    }
    let data: Vec<Vec<i64>> = rows.into_iter().map(|(_, r)| r).collect();
    SignedGraph::from_adjacency(IntMatrix::from_rows(&data)?)
}

/// Plain matrix rendering without a trailing newline, e.g. `"0 1\n1 0"`.
pub fn to_matrix(g: &SignedGraph) -> String {
    g.adjacency().to_string()
}

pub fn to_dot(g: &SignedGraph, one_indexed: bool) -> String {
    let offset = usize::from(one_indexed);
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {};", v + offset);
    }
    for (u, v, s) in g.edges() {
        let (color, style) = if s > 0 { ("blue", "solid") } else { ("red", "dashed") };
        let _ = writeln!(out, "  {} -- {} [color={color}, style={style}];", u + offset, v + offset);
    }
    out.push_str("}\n");
    out
}

/// Parse either format: JSON if the first non-blank character is `{`.
pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_matrix(text)
    }
}

pub fn emit(g: &SignedGraph, format: Format, one_indexed: bool) -> String {
    match format {
        Format::Json => to_json(g, one_indexed),
        Format::Matrix => {
            let mut s = to_matrix(g);
            s.push('\n');
            s
        }
        Format::Dot => to_dot(g, one_indexed),
    }
}

/// Parse a plain `{-1, 0, 1}` matrix that need not be symmetric (weighing
/// matrices, incidence matrices).
pub fn parse_signed_matrix(text: &str) -> Result<crate::matrix::SignedMatrix> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    column: line.find(t).unwrap_or(0) + 1,
                    message: format!("expected an integer, found '{t}'"),
                })
            })
            .collect::<Result<Vec<i64>>>()?;
        rows.push(row);
    }
    crate::matrix::SignedMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k2_matrix_format() {
        let k2 = SignedGraph::complete_positive(2);
        assert_eq!(to_matrix(&k2), "0 1\n1 0");
        assert_eq!(parse_matrix("0 1\n1 0").unwrap(), k2);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for g in [fixtures::pentagon(), fixtures::figure1(), SignedGraph::from_edge_list(3, &[]).unwrap()] {
            for one in [false, true] {
                let text = to_json(&g, one);
                let back = parse_json(&text).unwrap();
                assert_eq!(back, g);
                assert_eq!(to_json(&back, one), text);
            }
        }
    }

    #[test]
    fn dot_line_styles() {
        let dot = to_dot(&fixtures::pentagon(), true);
        assert_eq!(dot.matches("style=solid").count(), 10);
        assert_eq!(dot.matches("style=dashed").count(), 5);
        assert!(dot.contains("2 -- 3 [color=red, style=dashed];"));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_matrix("0 1\n1 x") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_json("{\"n\": 2,\n \"edges\": [[0, 1]]}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_matrix("0 2\n2 0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("0 1 0\n1 0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn one_indexed_input() {
        let g = parse_json(r#"{"n": 2, "one_indexed": true, "edges": [[1, 2, -1]]}"#).unwrap();
        assert_eq!(g.sign(0, 1), -1);
        assert!(parse_json(r#"{"n": 2, "one_indexed": true, "edges": [[0, 1, 1]]}"#).is_err());
    }

    #[test]
    fn format_names() {
        assert_eq!("dot".parse::<Format>().unwrap(), Format::Dot);
        assert_eq!("svg".parse::<Format>().unwrap_err(), Error::UnknownFormat("svg".into()));
    }
}
