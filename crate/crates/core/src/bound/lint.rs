//! Necessary structural conditions for minimal bounds. A violation shows
//! the graph is not minimal; it says nothing about whether it bounds.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{bfs_distances, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// A degree-2 vertex lying on no 6-cycle.
    DegreeTwoOffSixCycle { v: Vertex },
    /// Two adjacent degree-2 vertices.
    AdjacentDegreeTwo { u: Vertex, v: Vertex },
    /// A 6-cycle with more than two degree-2 vertices, or with two that are
    /// not at distance 3 both along the cycle and in the graph.
    CrowdedSixCycle {
        cycle: [Vertex; 6],
        degree_two: Vec<Vertex>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegreeTwoOffSixCycle { v } => {
                write!(f, "degree-2 vertex {v} lies on no 6-cycle")
            }
            Violation::AdjacentDegreeTwo { u, v } => {
                write!(f, "adjacent degree-2 vertices {u} {v}")
            }
            Violation::CrowdedSixCycle { cycle, degree_two } => {
                let c: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
                let d: Vec<String> = degree_two.iter().map(|x| x.to_string()).collect();
                write!(
                    f,
                    "6-cycle {} has degree-2 vertices {} badly placed",
                    c.join(" "),
                    d.join(" ")
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LintReport {
    pub violations: Vec<Violation>,
}

impl LintReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for LintReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return writeln!(f, "clean");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Rotates and reflects a 6-cycle so it starts at its smallest vertex and
/// continues towards the smaller neighbour.
fn canonical(c: [Vertex; 6]) -> [Vertex; 6] {
    let i = (0..6).min_by_key(|&i| c[i]).unwrap_or(0);
    let fwd: [Vertex; 6] = std::array::from_fn(|j| c[(i + j) % 6]);
    let bwd: [Vertex; 6] = std::array::from_fn(|j| c[(i + 6 - j) % 6]);
    fwd.min(bwd)
}

/// All 6-cycles through `u`, canonicalised.
fn six_cycles_through(g: &Graph, u: Vertex, out: &mut BTreeSet<[Vertex; 6]>) {
    let mut path = [u, 0, 0, 0, 0, 0];
    fn extend(g: &Graph, path: &mut [Vertex; 6], len: usize, out: &mut BTreeSet<[Vertex; 6]>) {
        let last = path[len - 1];
        if len == 6 {
            if g.has_edge(last, path[0]) {
                out.insert(canonical(*path));
            }
            return;
        }
        for &x in g.neighbors(last) {
            if !path[..len].contains(&x) {
                path[len] = x;
                extend(g, path, len + 1, out);
            }
        }
    }
    extend(g, &mut path, 1, out);
}

/// Reports every violated condition; `k < 2` gives an empty report since
/// the conditions only hold for odd-girth at least 5.
pub fn minimality_lint(b: &Graph, k: u32) -> LintReport {
    let mut violations = Vec::new();
    if k < 2 {
        return LintReport { violations };
    }
    let deg2: Vec<Vertex> = (0..b.n()).filter(|&v| b.degree(v) == 2).collect();
    let mut cycles = BTreeSet::new();
    for &v in &deg2 {
        let mut mine = BTreeSet::new();
        six_cycles_through(b, v, &mut mine);
        if mine.is_empty() {
            violations.push(Violation::DegreeTwoOffSixCycle { v });
        }
        cycles.extend(mine);
    }
    for &u in &deg2 {
        for &v in b.neighbors(u) {
            if u < v && b.degree(v) == 2 {
                violations.push(Violation::AdjacentDegreeTwo { u, v });
            }
        }
    }
    for cycle in cycles {
        let on: Vec<usize> = (0..6).filter(|&i| b.degree(cycle[i]) == 2).collect();
        let bad = match on.as_slice() {
            [i, j] => j - i != 3 || bfs_distances(b, cycle[*i])[cycle[*j]] != 3,
            s => s.len() > 2,
        };
        if bad {
            let degree_two = on.iter().map(|&i| cycle[i]).collect();
            violations.push(Violation::CrowdedSixCycle { cycle, degree_two });
        }
    }
    LintReport { violations }
}
