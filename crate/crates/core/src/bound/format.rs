//! Text forms of verdicts.
//!
//! A YES certificate:
//!
//! ```text
//! # del <u> <v> <weight> <p> <q> <r>     (pruning trace, informational)
//! cert <n> <k>
//! w <u> <v> <d>
//! base <m>
//! e <u> <v>
//! ```
//!
//! A NO verdict is `no <reason>` followed by `del <u> <v> <weight> <p> <q> <r>`
//! lines.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Answer, BoundVerdict, DeletionEvent, PartialDistanceGraph, WeightedEdge};
use crate::error::{Error, Result};
use crate::graph::io::{build_checked, content_lines, parse_edge_lines, parse_num, push_edges};

fn push_event(out: &mut String, prefix: &str, e: &DeletionEvent) {
    let t = e.triple;
    let _ = writeln!(out, "{prefix}del {} {} {} {} {} {}", e.u, e.v, e.weight, t.p, t.q, t.r);
}

pub fn write_certificate(pdg: &PartialDistanceGraph) -> String {
    let mut out = format!("cert {} {}\n", pdg.base.n(), pdg.k);
    for e in &pdg.edges {
        let _ = writeln!(out, "w {} {} {}", e.u, e.v, e.weight);
    }
    let _ = writeln!(out, "base {}", pdg.base.m());
    push_edges(&mut out, &pdg.base);
    out
}

/// YES: the certificate preceded by the trace as comments. NO: the reason
/// and the trace.
pub fn write_verdict(v: &BoundVerdict) -> String {
    let mut out = String::new();
    match (v.answer, &v.certificate) {
        (Answer::Yes, Some(pdg)) => {
            for e in &v.trace {
                push_event(&mut out, "# ", e);
            }
            out.push_str(&write_certificate(pdg));
        }
        _ => {
            let reason = v.final_reason.map_or("UNKNOWN", |r| r.as_str());
            let _ = writeln!(out, "no {reason}");
            for e in &v.trace {
                push_event(&mut out, "", e);
            }
        }
    }
    out
}

/// Parses a YES certificate. Structural checks only (ranges, ordering,
/// duplicates); use `verify_certificate` for the semantic check.
pub fn parse_certificate(text: &str) -> Result<PartialDistanceGraph> {
    let mut lines = content_lines(text).peekable();
    let (no, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("cert") {
        return Err(Error::parse(no, "expected `cert <n> <k>`"));
    }
    let n: usize = parse_num(no, toks.next(), "vertex count")?;
    let k: u32 = parse_num(no, toks.next(), "k")?;

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    while let Some(&(no, line)) = lines.peek() {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("w") {
            break;
        }
        let a: usize = parse_num(no, toks.next(), "endpoint")?;
        let b: usize = parse_num(no, toks.next(), "endpoint")?;
        let weight: u32 = parse_num(no, toks.next(), "weight")?;
        if a == b || a >= n || b >= n {
            return Err(Error::parse(no, "bad weighted pair"));
        }
        let (u, v) = (a.min(b), a.max(b));
        if !seen.insert((u, v)) {
            return Err(Error::parse(no, "duplicate weighted pair"));
        }
        edges.push(WeightedEdge { u, v, weight });
        lines.next();
    }
    edges.sort();

    let (no, trailer) = lines.next().ok_or_else(|| Error::parse(0, "missing `base <m>`"))?;
    let mut toks = trailer.split_whitespace();
    if toks.next() != Some("base") {
        return Err(Error::parse(no, "expected `base <m>`"));
    }
    let m: usize = parse_num(no, toks.next(), "edge count")?;
    let base_edges = parse_edge_lines(&mut lines)?;
    if let Some((no, _)) = lines.next() {
        return Err(Error::parse(no, "unexpected line"));
    }
    if base_edges.len() != m {
        return Err(Error::parse(
            no,
            format!("expected {m} base edges, found {}", base_edges.len()),
        ));
    }
    let base = build_checked(n, &base_edges)?;
    Ok(PartialDistanceGraph { base, k, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::check_bound;
    use crate::families::{c8pp, cycle};

    #[test]
    fn round_trip() {
        let v = check_bound(&c8pp(), 2);
        let text = write_verdict(&v);
        assert!(text.starts_with("cert 8 2\n"));
        let back = parse_certificate(&text).unwrap();
        assert_eq!(Some(back), v.certificate);
    }

    #[test]
    fn no_output() {
        let text = write_verdict(&check_bound(&cycle(5).unwrap(), 2));
        assert!(text.starts_with("no ODD_GIRTH_MISMATCH\ndel 0 2 2 2 2 2\n"));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_certificate("cert 3 1\nw 0 0 1\nbase 0\n").is_err());
        assert!(parse_certificate("cert 3 1\nbase 1\n").is_err());
        assert!(parse_certificate("graph 3\n").is_err());
    }
}
