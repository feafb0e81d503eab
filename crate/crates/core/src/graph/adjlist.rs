//! Plain text fixtures: a line holding `n`, then one `u v` line per edge.
//! Blank lines and `#` comments are ignored.

use std::fmt::Write;

use super::{Graph, MAX_VERTICES};
use crate::error::ParseError;

pub fn parse_adjacency_list(text: &str, cap: usize) -> Result<Graph, ParseError> {
    let cap = cap.min(MAX_VERTICES);
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, msg: String| ParseError::AdjList { line, msg };
    let (first_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let n: usize = header
        .parse()
        .map_err(|_| err(first_line, format!("expected vertex count, got {header:?}")))?;
    if n > cap {
        return Err(ParseError::CapExceeded { n, cap });
    }

    let mut g = Graph::empty(n);
    for (line, l) in lines {
        let mut parts = l.split_whitespace();
        let mut endpoint = || -> Result<usize, ParseError> {
            let tok = parts.next().ok_or_else(|| err(line, "expected two endpoints".into()))?;
            let v: usize = tok.parse().map_err(|_| err(line, format!("bad vertex {tok:?}")))?;
            if v >= n {
                return Err(err(line, format!("vertex {v} out of range for n={n}")));
            }
            Ok(v)
        };
        let a = endpoint()?;
        let b = endpoint()?;
        if parts.next().is_some() {
            return Err(err(line, "more than two tokens".into()));
        }
        if a == b {
            return Err(err(line, format!("self-loop at {a}")));
        }
        g.link(a, b);
    }
    Ok(g)
}

pub fn encode_adjacency_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u, e.v);
    }
    s
}
