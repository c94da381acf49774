//! Plain-text edge lists.
//!
//! The first data line holds the vertex count `n`; every further non-empty
//! line is a whitespace-separated pair `u v` of 0-based indices. Lines whose
//! first non-blank character is `#` are comments. Duplicate and reversed pairs
//! are accepted and collapse to one edge.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing vertex count line")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let n: usize = header.parse().map_err(|_| ParseError::Syntax {
        line: header_line,
        msg: format!("expected vertex count, found {header:?}"),
    })?;
    let mut g = Graph::empty(n).map_err(|source| ParseError::Graph { line: header_line, source })?;

    for (line, text) in lines {
        let mut fields = text.split_whitespace();
        let mut endpoint = || -> Result<usize, ParseError> {
            let tok = fields
                .next()
                .ok_or_else(|| ParseError::Syntax { line, msg: "expected two vertex indices".into() })?;
            tok.parse().map_err(|_| ParseError::Syntax { line, msg: format!("invalid vertex index {tok:?}") })
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if fields.next().is_some() {
            return Err(ParseError::Syntax { line, msg: "trailing tokens after edge".into() });
        }
        g.add_edge(u, v).map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(g)
}

/// Canonical serialization: header, then edges `u < v` in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
