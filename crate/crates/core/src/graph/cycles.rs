use super::distance::{bfs_distances, INFINITE};
use super::{Graph, Vertex};
use crate::error::{Error, Result};
use crate::par::{self, ScanMode};

/// Default node budget for [`exists_cycle_through_pair`].
pub const DEFAULT_CYCLE_BUDGET: u64 = 10_000_000;

/// Best closed odd walk found from one BFS root: (length, root, x, y) where
/// `xy` is an edge with both endpoints at the same depth.
fn best_from(g: &Graph, root: Vertex) -> Option<(u32, Vertex, Vertex, Vertex)> {
    let dist = bfs_distances(g, root);
    let mut best: Option<(u32, Vertex, Vertex, Vertex)> = None;
    for (x, y) in g.edges() {
        let (dx, dy) = (dist[x], dist[y]);
        if dx != INFINITE && dx == dy {
            let len = 2 * dx + 1;
            if best.is_none_or(|b| len < b.0) {
                best = Some((len, root, x, y));
            }
        }
    }
    best
}

fn best_overall(g: &Graph) -> Option<(u32, Vertex, Vertex, Vertex)> {
    par::map_range(ScanMode::default(), g.n(), |v| best_from(g, v))
        .into_iter()
        .flatten()
        .min()
}

/// Length of a shortest odd cycle, `None` when the graph is bipartite.
///
/// Minimises `2 d(v,x) + 1` over roots `v` and edges `xy` with
/// `d(v,x) = d(v,y)`; a shortest odd closed walk is a shortest odd cycle.
pub fn odd_girth(g: &Graph) -> Option<u32> {
    best_overall(g).map(|b| b.0)
}

/// A shortest odd cycle as a vertex sequence (first vertex not repeated).
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let (_, root, x, y) = best_overall(g)?;
    // At the global minimum the two BFS tree paths meet only at the root,
    // otherwise a shorter odd cycle would exist.
    let parent = bfs_parents(g, root);
    let path_to = |mut t: Vertex| {
        let mut p = vec![t];
        while t != root {
            t = parent[t];
            p.push(t);
        }
        p.reverse();
        p
    };
    let mut cycle = path_to(x);
    let mut back = path_to(y);
    back.remove(0);
    back.reverse();
    cycle.extend(back);
    Some(cycle)
}

fn bfs_parents(g: &Graph, s: Vertex) -> Vec<Vertex> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[s] = s;
    let mut queue = vec![s];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &y in g.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push(y);
            }
        }
    }
    parent
}

struct PairSearch<'a> {
    g: &'a Graph,
    target: Vertex,
    dist_to_target: Vec<u32>,
    used: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl PairSearch<'_> {
    /// Extends a path ending at `x` by exactly `steps` edges to the target,
    /// avoiding used vertices. On success calls `then` with the path's
    /// interior still marked, returning its verdict.
    fn walk(&mut self, x: Vertex, steps: u32, then: &mut dyn FnMut(&mut Self) -> Result<bool>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if steps == 0 {
            return if x == self.target { then(self) } else { Ok(false) };
        }
        if self.dist_to_target[x] > steps {
            return Ok(false);
        }
        let g = self.g;
        for &y in g.neighbors(x) {
            if y == self.target {
                if steps == 1 && self.walk(y, 0, then)? {
                    return Ok(true);
                }
                continue;
            }
            if self.used[y] {
                continue;
            }
            self.used[y] = true;
            let found = self.walk(y, steps - 1, then)?;
            self.used[y] = false;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Whether some cycle of length exactly `len` passes through both `u` and
/// `v`. Splits `len` into two internally disjoint `u`-`v` paths.
pub fn exists_cycle_through_pair(g: &Graph, u: Vertex, v: Vertex, len: u32, budget: u64) -> Result<bool> {
    if u == v || len < 3 {
        return Err(Error::Domain("need u != v and len >= 3".into()));
    }
    let dist_to_target = bfs_distances(g, v);
    let d = dist_to_target[u];
    if d == INFINITE {
        return Ok(false);
    }
    let mut search = PairSearch {
        g,
        target: v,
        dist_to_target,
        used: vec![false; g.n()],
        nodes: 0,
        budget,
    };
    search.used[u] = true;
    for a in d..=len / 2 {
        let b = len - a;
        let mut second = |s: &mut PairSearch<'_>| s.walk(u, b, &mut |_| Ok(true));
        if search.walk(u, a, &mut second)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every simple cycle of length `len >= 3`, each listed once: starting at
/// its smallest vertex, second vertex smaller than the last.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<Vertex>> {
    fn grow(g: &Graph, len: usize, path: &mut Vec<Vertex>, on: &mut [bool], out: &mut Vec<Vec<Vertex>>) {
        let (s, last) = (path[0], path[path.len() - 1]);
        if path.len() == len {
            if g.has_edge(last, s) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        for &x in g.neighbors(last) {
            if x > s && !on[x] {
                on[x] = true;
                path.push(x);
                grow(g, len, path, on, out);
                path.pop();
                on[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    let mut on = vec![false; g.n()];
    for s in 0..g.n() {
        let mut path = vec![s];
        grow(g, len, &mut path, &mut on, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn odd_girth_of_cycles() {
        assert_eq!(odd_girth(&cycle(5)), Some(5));
        assert_eq!(odd_girth(&cycle(6)), None);
        assert_eq!(odd_girth(&cycle(3)), Some(3));
        assert_eq!(odd_girth(&Graph::empty(3)), None);
    }

    #[test]
    fn shortest_odd_cycle_is_a_cycle() {
        // C9 with a chord creating a 5-cycle 0-1-2-3-4-0
        let mut e: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        e.push((0, 4));
        let g = Graph::from_edges(9, e).unwrap();
        let c = shortest_odd_cycle(&g).unwrap();
        assert_eq!(c.len(), 5);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
        let mut s = c.clone();
        s.sort_unstable();
        s.dedup();
        assert_eq!(s.len(), 5);
    }

    #[test]
    fn cycle_through_pair_on_c5() {
        let g = cycle(5);
        assert!(exists_cycle_through_pair(&g, 0, 2, 5, DEFAULT_CYCLE_BUDGET).unwrap());
        assert!(!exists_cycle_through_pair(&g, 0, 2, 4, DEFAULT_CYCLE_BUDGET).unwrap());
        assert!(!exists_cycle_through_pair(&g, 0, 1, 3, DEFAULT_CYCLE_BUDGET).unwrap());
        assert!(exists_cycle_through_pair(&g, 0, 0, 5, 10).is_err());
    }

    #[test]
    fn counts_cycles() {
        assert_eq!(cycles_of_length(&cycle(7), 7), vec![vec![0, 1, 2, 3, 4, 5, 6]]);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(cycles_of_length(&k4, 3).len(), 4);
        assert_eq!(cycles_of_length(&k4, 4).len(), 3);
    }

    #[test]
    fn cycle_through_pair_respects_budget() {
        let g = Graph::from_edges(8, (0..8).flat_map(|u| (u + 1..8).map(move |v| (u, v)))).unwrap();
        assert_eq!(exists_cycle_through_pair(&g, 0, 1, 8, 3), Err(Error::BudgetExceeded(3)));
        assert!(exists_cycle_through_pair(&g, 0, 1, 8, DEFAULT_CYCLE_BUDGET).unwrap());
    }
}
