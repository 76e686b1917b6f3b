//! The `.sgl` signed edge-list format.
//!
//! ```text
//! # comment lines and blank lines are skipped
//! 3          <- vertex count
//! 0 1 +      <- one edge per line: u v sign
//! 1 2 -
//! ```
//!
//! Lines end in LF or CRLF. Line numbers in errors are 1-based and count
//! every physical line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphError, Sign, SignedGraph, SignedGraphBuilder};

/// Headers above this are rejected before anything is allocated.
pub const DEFAULT_MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing vertex-count header")]
    MissingHeader,
    #[error("line {line}: malformed record")]
    MalformedRecord { line: usize },
    #[error("line {line}: sign token must be '+' or '-'")]
    BadSignToken { line: usize },
    #[error("line {line}: vertex count {n} exceeds limit {max}")]
    TooManyVertices { line: usize, n: usize, max: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match *self {
            ParseError::MissingHeader => None,
            ParseError::MalformedRecord { line }
            | ParseError::BadSignToken { line }
            | ParseError::TooManyVertices { line, .. }
            | ParseError::Graph { line, .. } => Some(line),
        }
    }
}

/// Strict base-10: ASCII digits only, no sign, no whitespace.
fn parse_id(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

fn parse_sign(token: &str) -> Option<Sign> {
    match token {
        "+" => Some(Sign::Plus),
        "-" => Some(Sign::Minus),
        _ => None,
    }
}

pub fn parse_sgl(text: &str) -> Result<SignedGraph, ParseError> {
    parse_sgl_with_limit(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_sgl_with_limit(text: &str, max_vertices: usize) -> Result<SignedGraph, ParseError> {
    let mut builder: Option<SignedGraphBuilder> = None;

    for (index, raw) in text.split('\n').enumerate() {
        let line = index + 1;
        let content = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_ascii_whitespace().collect();

        let Some(builder) = builder.as_mut() else {
            let n = match tokens.as_slice() {
                [n] => parse_id(n).ok_or(ParseError::MalformedRecord { line })?,
                _ => return Err(ParseError::MalformedRecord { line }),
            };
            if n > max_vertices {
                return Err(ParseError::TooManyVertices {
                    line,
                    n,
                    max: max_vertices,
                });
            }
            builder = Some(SignedGraphBuilder::new(n));
            continue;
        };

        let [u, v, s] = tokens.as_slice() else {
            return Err(ParseError::MalformedRecord { line });
        };
        let (Some(u), Some(v)) = (parse_id(u), parse_id(v)) else {
            return Err(ParseError::MalformedRecord { line });
        };
        let sign = parse_sign(s).ok_or(ParseError::BadSignToken { line })?;
        builder
            .add_edge(u, v, sign)
            .map_err(|source| ParseError::Graph { line, source })?;
    }

    builder
        .map(SignedGraphBuilder::finish)
        .ok_or(ParseError::MissingHeader)
}

/// Canonical text: header, edges in canonical order, LF endings.
pub fn write_sgl(graph: &SignedGraph) -> String {
    let mut out = String::with_capacity(8 + graph.edge_count() * 12);
    writeln!(out, "{}", graph.vertex_count()).unwrap();
    for e in graph.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.sign).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Minus, Plus};

    fn p3() -> SignedGraph {
        SignedGraph::build(3, [(0, 1, Plus), (1, 2, Minus)]).unwrap()
    }

    #[test]
    fn parses_plain_document() {
        assert_eq!(parse_sgl("3\n0 1 +\n1 2 -\n"), Ok(p3()));
    }

    #[test]
    fn skips_comments_and_blanks() {
        let k2 = SignedGraph::build(2, [(0, 1, Minus)]).unwrap();
        assert_eq!(parse_sgl("# comment\n\n2\n0 1 -\n"), Ok(k2));
        assert_eq!(parse_sgl("  # indented\n3\n\t0  1 +\n1\t2 -"), Ok(p3()));
    }

    #[test]
    fn accepts_crlf() {
        assert_eq!(parse_sgl("3\r\n0 1 +\r\n1 2 -\r\n"), Ok(p3()));
    }

    #[test]
    fn bad_sign_token() {
        assert_eq!(
            parse_sgl("2\n0 1 *\n"),
            Err(ParseError::BadSignToken { line: 2 })
        );
        assert_eq!(
            parse_sgl("2\n0 1 ++\n"),
            Err(ParseError::BadSignToken { line: 2 })
        );
    }

    #[test]
    fn missing_header() {
        assert_eq!(parse_sgl(""), Err(ParseError::MissingHeader));
        assert_eq!(parse_sgl("# only\n\n"), Err(ParseError::MissingHeader));
    }

    #[test]
    fn malformed_records() {
        for (text, line) in [
            ("x\n", 1),
            ("3 4\n", 1),
            ("-3\n", 1),
            ("3\n0 1\n", 2),
            ("3\n0 1 + extra\n", 2),
            ("3\n\n0 +1 +\n", 3),
            ("3\n0 -1 +\n", 2),
            ("3\n0 99999999999999999999999 +\n", 2),
        ] {
            assert_eq!(
                parse_sgl(text),
                Err(ParseError::MalformedRecord { line }),
                "{text:?}"
            );
        }
    }

    #[test]
    fn graph_errors_carry_line_numbers() {
        assert_eq!(
            parse_sgl("2\n# c\n1 1 +\n"),
            Err(ParseError::Graph {
                line: 3,
                source: GraphError::LoopEdge(1)
            })
        );
        assert_eq!(
            parse_sgl("3\n0 1 +\n1 2 +\n1 0 -\n"),
            Err(ParseError::Graph {
                line: 4,
                source: GraphError::DuplicateEdge(0, 1)
            })
        );
        assert_eq!(
            parse_sgl("3\n0 3 +\n"),
            Err(ParseError::Graph {
                line: 2,
                source: GraphError::VertexOutOfRange { id: 3, n: 3 }
            })
        );
    }

    #[test]
    fn vertex_limit() {
        assert_eq!(
            parse_sgl_with_limit("11\n", 10),
            Err(ParseError::TooManyVertices {
                line: 1,
                n: 11,
                max: 10
            })
        );
        assert!(parse_sgl_with_limit("10\n", 10).is_ok());
    }

    #[test]
    fn writes_canonical_text() {
        assert_eq!(write_sgl(&p3()), "3\n0 1 +\n1 2 -\n");
        assert_eq!(write_sgl(&SignedGraph::build(2, []).unwrap()), "2\n");
        let shuffled = parse_sgl("3\n2 1 -\n1 0 +").unwrap();
        assert_eq!(write_sgl(&shuffled), "3\n0 1 +\n1 2 -\n");
    }
}
