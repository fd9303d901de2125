//! Plain-text graph format:
//!
//! ```text
//! # optional comments
//! graph <n>
//! e <u> <v>
//! ```
//!
//! Writers emit `u < v` in lexicographic order. Readers accept any order and
//! either endpoint order; loops and duplicates are errors.

use std::fmt::Write as _;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_num<T: std::str::FromStr>(line: usize, tok: Option<&str>, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

/// Parses `e <u> <v>` lines until a line with a different keyword; returns
/// the edges and the line where parsing stopped.
pub(crate) fn parse_edge_lines<'a, I>(lines: &mut std::iter::Peekable<I>) -> Result<Vec<(usize, Vertex, Vertex)>>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let mut edges = Vec::new();
    while let Some(&(no, line)) = lines.peek() {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("e") {
            break;
        }
        let u = parse_num(no, toks.next(), "endpoint")?;
        let v = parse_num(no, toks.next(), "endpoint")?;
        if toks.next().is_some() {
            return Err(Error::parse(no, "trailing tokens"));
        }
        edges.push((no, u, v));
        lines.next();
    }
    Ok(edges)
}

pub(crate) fn build_checked(n: usize, edges: &[(usize, Vertex, Vertex)]) -> Result<Graph> {
    let mut seen = std::collections::HashSet::new();
    for &(no, u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::parse(no, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::parse(no, "loop"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(no, "duplicate edge"));
        }
    }
    Graph::from_edges(n, edges.iter().map(|&(_, u, v)| (u, v)))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text).peekable();
    let (no, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("graph") {
        return Err(Error::parse(no, "expected `graph <n>`"));
    }
    let n: usize = parse_num(no, toks.next(), "vertex count")?;
    let edges = parse_edge_lines(&mut lines)?;
    if let Some((no, _)) = lines.next() {
        return Err(Error::parse(no, "unexpected line"));
    }
    build_checked(n, &edges)
}

pub(crate) fn push_edges(out: &mut String, g: &Graph) {
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    push_edges(&mut out, g);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_any_order_with_comments() {
        let g = parse_graph("# tri\n\ngraph 3\ne 2 1\ne 0 2\n# mid\ne 1 0\n").unwrap();
        assert_eq!(write_graph(&g), "graph 3\ne 0 1\ne 0 2\ne 1 2\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_graph("graph 2\ne 0 1\ne 1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_graph("graph 2\ne 1 1\n").is_err());
        assert!(parse_graph("graph 2\ne 0 2\n").is_err());
        assert!(parse_graph("graf 2\n").is_err());
        assert!(parse_graph("graph 2\ne 0 1\nx\n").is_err());
        assert!(parse_graph("").is_err());
    }
}
