//! Change scripts for `mutate`.
//!
//! One change per line, 1-based ids as in DIMACS:
//!
//! ```text
//! ae u v           add edge
//! re u v           remove edge
//! av v: n1 n2 ...  add vertex v (must be n+1) with the listed neighbors
//! rv v             remove vertex v; the last vertex takes id v
//! ```
//!
//! Blank lines and lines starting with `#` or `c ` are ignored.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use grundy_core::{GraphChange, Vertex};

/// A change as written in a script. `AddVertex` keeps the declared id so it
/// can be checked against the graph at application time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptLine {
    pub line: usize,
    pub text: String,
    pub declared_id: Option<Vertex>,
    pub change: GraphChange,
}

pub fn parse_script(text: &str) -> Result<Vec<ScriptLine>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty()
            || trimmed.starts_with('#')
            || trimmed == "c"
            || trimmed.starts_with("c ")
        {
            continue;
        }
        let (declared_id, change) =
            parse_line(trimmed).with_context(|| format!("change script line {line}"))?;
        out.push(ScriptLine {
            line,
            text: trimmed.to_string(),
            declared_id,
            change,
        });
    }
    Ok(out)
}

fn id(token: Option<&str>) -> Result<Vertex> {
    let token = token.ok_or_else(|| anyhow!("missing vertex id"))?;
    let v: usize = token
        .parse()
        .map_err(|_| anyhow!("malformed vertex id `{token}`"))?;
    if v == 0 {
        bail!("vertex ids are 1-based");
    }
    Ok(v - 1)
}

fn parse_line(line: &str) -> Result<(Option<Vertex>, GraphChange)> {
    let (op, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
    if op == "av" {
        let (head, tail) = rest
            .split_once(':')
            .ok_or_else(|| anyhow!("expected `av v: n1 n2 ...`"))?;
        let mut head_tokens = head.split_whitespace();
        let v = id(head_tokens.next())?;
        if let Some(extra) = head_tokens.next() {
            bail!("unexpected token `{extra}` before `:`");
        }
        let neighbors = tail
            .split_whitespace()
            .map(|t| id(Some(t)))
            .collect::<Result<Vec<_>>>()?;
        return Ok((Some(v), GraphChange::AddVertex { neighbors }));
    }
    let mut tokens = rest.split_whitespace();
    let change = match op {
        "ae" => GraphChange::AddEdge(id(tokens.next())?, id(tokens.next())?),
        "re" => GraphChange::RemoveEdge(id(tokens.next())?, id(tokens.next())?),
        "rv" => GraphChange::RemoveVertex(id(tokens.next())?),
        other => bail!("unknown change `{other}`"),
    };
    if let Some(extra) = tokens.next() {
        bail!("unexpected trailing token `{extra}`");
    }
    Ok((None, change))
}

/// Renders a change as a script line. `n` is the vertex count before the
/// change, needed for the id of an added vertex.
pub fn format_change(change: &GraphChange, n: usize) -> String {
    match change {
        GraphChange::AddEdge(u, v) => format!("ae {} {}", u + 1, v + 1),
        GraphChange::RemoveEdge(u, v) => format!("re {} {}", u + 1, v + 1),
        GraphChange::RemoveVertex(v) => format!("rv {}", v + 1),
        GraphChange::AddVertex { neighbors } => {
            let mut s = format!("av {}:", n + 1);
            for u in neighbors {
                write!(s, " {}", u + 1).unwrap();
            }
            s
        }
    }
}
