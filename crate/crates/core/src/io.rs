//! Plain-text edge-list format.
//!
//! ```text
//! c optional comment lines
//! p <n> <m>
//! e <u> <v>      (m lines, 1-indexed endpoints)
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

pub fn read_edgelist(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                let mut first = toks.next();
                // DIMACS writes `p edge n m`
                if matches!(first, Some("edge") | Some("col")) {
                    first = toks.next();
                }
                let n = parse_count(first, line, "vertex count")?;
                let m = parse_count(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after header"));
                }
                if n == 0 {
                    return Err(parse_err(line, "vertex count must be at least 1"));
                }
                header = Some((n, m, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(parse_err(line, "edge before header"));
                };
                let u = parse_count(toks.next(), line, "endpoint")?;
                let v = parse_count(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after edge"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(line, format!("index {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(line, format!("unknown line tag `{other}`"))),
        }
    }

    let (n, m, header_line) = header.ok_or_else(|| parse_err(last_line.max(1), "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(
            header_line,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edgelist(g: &Graph) -> String {
    write_edgelist_with_comments(g, &[])
}

/// Like [`write_edgelist`] with leading `c` comment lines.
pub fn write_edgelist_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}
