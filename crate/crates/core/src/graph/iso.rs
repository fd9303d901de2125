use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Default node budget for [`iso_check`].
pub const DEFAULT_ISO_BUDGET: u64 = 10_000_000;

fn signature(g: &Graph, v: Vertex) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// Connected search order: BFS from the highest-degree vertex of each
/// component.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    let mut roots: Vec<Vertex> = (0..g.n()).collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

struct IsoSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<Vertex>,
    sig_g: Vec<(usize, Vec<usize>)>,
    sig_h: Vec<(usize, Vec<usize>)>,
    map: Vec<Option<Vertex>>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl IsoSearch<'_> {
    fn consistent(&self, x: Vertex, y: Vertex) -> bool {
        self.order.iter().all(|&a| match self.map[a] {
            Some(b) => self.g.has_edge(x, a) == self.h.has_edge(y, b),
            None => true,
        })
    }

    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let x = self.order[depth];
        let anchor = self.g.neighbors(x).iter().find_map(|&a| self.map[a]);
        let candidates: Vec<Vertex> = match anchor {
            Some(b) => self.h.neighbors(b).to_vec(),
            None => (0..self.h.n()).collect(),
        };
        for y in candidates {
            if self.used[y] || self.sig_g[x] != self.sig_h[y] || !self.consistent(x, y) {
                continue;
            }
            self.map[x] = Some(y);
            self.used[y] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.map[x] = None;
            self.used[y] = false;
        }
        Ok(false)
    }
}

/// Whether `g` and `h` are isomorphic. Plain backtracking with degree and
/// neighbour-degree pruning, meant for graphs of a few dozen vertices.
pub fn iso_check(g: &Graph, h: &Graph, budget: u64) -> Result<bool> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    let sig_g: Vec<_> = (0..g.n()).map(|v| signature(g, v)).collect();
    let sig_h: Vec<_> = (0..h.n()).map(|v| signature(h, v)).collect();
    let mut a = sig_g.clone();
    let mut b = sig_h.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(false);
    }
    let mut search = IsoSearch {
        g,
        h,
        order: search_order(g),
        sig_g,
        sig_h,
        map: vec![None; g.n()],
        used: vec![false; h.n()],
        nodes: 0,
        budget,
    };
    search.extend(0)
}
