//! DIMACS `.col` reading and writing.
//!
//! ```text
//! c comment
//! p edge <N> <M>
//! e <u> <v>        (1-based, M lines)
//! ```
//!
//! Ids are translated to 0-based on read and back to 1-based on write.
//! The edge count on the problem line is advisory: duplicate or reversed
//! `e` lines are accepted and collapse to one edge.

use std::fmt::Write as _;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_ascii_whitespace();
        let Some(tag) = tokens.next() else {
            continue;
        };
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match tag {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(err("second problem line".into()));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(err(format!(
                            "expected `p edge N M`, found format {:?}",
                            other.unwrap_or("")
                        )))
                    }
                }
                let n = parse_count(tokens.next(), "vertex count").map_err(err)?;
                parse_count(tokens.next(), "edge count").map_err(err)?;
                expect_end(tokens).map_err(err)?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph.as_mut().ok_or(Error::MissingProblemLine)?;
                let n = g.n();
                let u = parse_endpoint(tokens.next(), n).map_err(err)?;
                let v = parse_endpoint(tokens.next(), n).map_err(err)?;
                expect_end(tokens).map_err(err)?;
                if u == v {
                    return Err(err(format!("self-loop on vertex {}", u + 1)));
                }
                g.add_edge_unchecked(u, v);
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }

    let graph = graph.ok_or(Error::MissingProblemLine)?;
    graph.debug_validate();
    Ok(graph)
}

fn parse_count(token: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let token = token.ok_or_else(|| format!("missing {what}"))?;
    token
        .parse()
        .map_err(|_| format!("malformed {what} `{token}`"))
}

fn parse_endpoint(token: Option<&str>, n: usize) -> std::result::Result<Vertex, String> {
    let token = token.ok_or_else(|| "missing edge endpoint".to_string())?;
    let id: usize = token
        .parse()
        .map_err(|_| format!("malformed vertex id `{token}`"))?;
    if id == 0 || id > n {
        return Err(format!("vertex {id} outside 1..={n}"));
    }
    Ok(id - 1)
}

fn expect_end<'a>(mut tokens: impl Iterator<Item = &'a str>) -> std::result::Result<(), String> {
    match tokens.next() {
        None => Ok(()),
        Some(extra) => Err(format!("unexpected trailing token `{extra}`")),
    }
}

/// Serializes `g`; each edge appears once as `e u v` with `u < v`, in
/// lexicographic order.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn duplicate_and_reversed_lines_collapse() {
        let g = parse_dimacs("c k2\np edge 2 1\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn missing_problem_line() {
        let err = parse_dimacs("e 1 2").unwrap_err();
        assert_eq!(err, Error::MissingProblemLine);
        assert_eq!(err.to_string(), "missing problem line");
        assert_eq!(parse_dimacs("c nothing\n"), Err(Error::MissingProblemLine));
    }

    #[test]
    fn errors_name_the_line() {
        let text = "p edge 3 1\nc fine\ne 1 4\n";
        match parse_dimacs(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("outside"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 2 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge three 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\np edge 3 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\nx 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn writes_k2() {
        let out = write_dimacs(&Graph::complete(2));
        assert_eq!(out, "p edge 2 1\ne 1 2\n");
    }

    #[test]
    fn writes_edgeless() {
        assert_eq!(write_dimacs(&Graph::new(3)), "p edge 3 0\n");
    }

    #[test]
    fn round_trip_fixed_graphs() {
        for g in [
            Graph::cycle(7),
            Graph::star(5),
            Graph::new(0),
            Graph::complete(6),
        ] {
            assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
        }
    }
}
