//! Line-oriented graph text format.
//!
//! ```text
//! # comment to end of line
//! v 5        # vertex count, exactly once, first directive
//! root 4     # optional, at most once
//! e 0 1      # directed edge 0 -> 1
//! ue 0 2     # undirected edge: inserts 0 -> 2 and 2 -> 0
//! ```
//!
//! Vertex ids are `0..n`. Duplicate edge lines are idempotent; self-loops
//! are rejected. Errors name the offending (1-based) line.

use maxsub_core::{Graph, VertexId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("first directive must be `v <n>`")]
    VertexCountNotFirst,
    #[error("duplicate `v` line")]
    DuplicateVertexCount,
    #[error("duplicate `root` line")]
    DuplicateRoot,
    #[error("vertex id {vertex} out of range (n = {n})")]
    OutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: VertexId },
    #[error("missing `v <n>` line")]
    MissingVertexCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses the graph text format.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut root: Option<(usize, VertexId)> = None;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();

        let parse_id = |tok: &str| -> Result<usize, ParseError> {
            tok.parse::<usize>().map_err(|_| {
                err(
                    lineno,
                    ParseErrorKind::Malformed(format!("bad number `{tok}`")),
                )
            })
        };

        match tokens[0] {
            "v" => {
                if tokens.len() != 2 {
                    return Err(err(
                        lineno,
                        ParseErrorKind::Malformed("`v` takes one argument".into()),
                    ));
                }
                if n.is_some() {
                    return Err(err(lineno, ParseErrorKind::DuplicateVertexCount));
                }
                n = Some(parse_id(tokens[1])?);
            }
            "root" => {
                let Some(n) = n else {
                    return Err(err(lineno, ParseErrorKind::VertexCountNotFirst));
                };
                if tokens.len() != 2 {
                    return Err(err(
                        lineno,
                        ParseErrorKind::Malformed("`root` takes one argument".into()),
                    ));
                }
                if root.is_some() {
                    return Err(err(lineno, ParseErrorKind::DuplicateRoot));
                }
                let r = parse_id(tokens[1])?;
                if r >= n {
                    return Err(err(lineno, ParseErrorKind::OutOfRange { vertex: r, n }));
                }
                root = Some((lineno, r));
            }
            "e" | "ue" => {
                let Some(n) = n else {
                    return Err(err(lineno, ParseErrorKind::VertexCountNotFirst));
                };
                if tokens.len() != 3 {
                    return Err(err(
                        lineno,
                        ParseErrorKind::Malformed(format!("`{}` takes two arguments", tokens[0])),
                    ));
                }
                let u = parse_id(tokens[1])?;
                let v = parse_id(tokens[2])?;
                for x in [u, v] {
                    if x >= n {
                        return Err(err(lineno, ParseErrorKind::OutOfRange { vertex: x, n }));
                    }
                }
                if u == v {
                    return Err(err(lineno, ParseErrorKind::SelfLoop { vertex: u }));
                }
                edges.push((u, v));
                if tokens[0] == "ue" {
                    edges.push((v, u));
                }
            }
            other => {
                return Err(err(
                    lineno,
                    ParseErrorKind::Malformed(format!("unknown directive `{other}`")),
                ));
            }
        }
    }

    let Some(n) = n else {
        return Err(err(last_line + 1, ParseErrorKind::MissingVertexCount));
    };
    let g = Graph::directed(n, &edges).expect("edges validated during parse");
    match root {
        Some((_, r)) => Ok(g.with_root(r).expect("root validated during parse")),
        None => Ok(g),
    }
}
