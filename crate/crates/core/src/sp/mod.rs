//! Series-parallel (K4-minor-free) graphs: recognition by reduction,
//! 2-tree completions, random instances and homomorphisms into bounds.

mod certificate;
mod hom;
mod random;

pub use certificate::hom_via_certificate;
pub use hom::{hom_search, is_hom, parse_hom, write_hom, Homomorphism, DEFAULT_HOM_BUDGET};
pub use random::random_sp_instance;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One step of the series-parallel reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Reduction {
    Isolated(Vertex),
    Leaf {
        v: Vertex,
        a: Vertex,
    },
    /// `v` had neighbours `a`, `b`; it is replaced by the edge `ab`
    /// (merged if already present).
    Series {
        v: Vertex,
        a: Vertex,
        b: Vertex,
    },
}

/// Repeatedly removes the smallest vertex of degree at most 2, replacing a
/// degree-2 vertex by an edge between its neighbours. Returns the steps and
/// whether every vertex was removed.
fn reduce(g: &Graph) -> (Vec<Reduction>, bool) {
    let n = g.n();
    let mut adj: Vec<BTreeSet<Vertex>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut ready: BTreeSet<Vertex> = (0..n).filter(|&v| adj[v].len() <= 2).collect();
    let mut steps = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        if !alive[v] || adj[v].len() > 2 {
            continue;
        }
        alive[v] = false;
        let nb: Vec<Vertex> = std::mem::take(&mut adj[v]).into_iter().collect();
        for &x in &nb {
            adj[x].remove(&v);
        }
        steps.push(match nb[..] {
            [] => Reduction::Isolated(v),
            [a] => Reduction::Leaf { v, a },
            [a, b] => {
                adj[a].insert(b);
                adj[b].insert(a);
                Reduction::Series { v, a, b }
            }
            _ => unreachable!("degree checked above"),
        });
        for &x in &nb {
            if adj[x].len() <= 2 {
                ready.insert(x);
            }
        }
    }
    (steps, alive.iter().all(|a| !a))
}

/// True iff `g` has no K4 minor, i.e. is a partial 2-tree.
pub fn is_k4_minor_free(g: &Graph) -> bool {
    reduce(g).1
}

/// A 2-tree containing a graph as a spanning subgraph, as a build order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTreeDecomposition {
    pub base_edge: (Vertex, Vertex),
    /// Each vertex joins adjacent to two already adjacent vertices.
    pub order: Vec<(Vertex, Vertex, Vertex)>,
    /// Completion edges missing from the input, `u < v`, sorted.
    pub fill_edges: Vec<(Vertex, Vertex)>,
}

impl TwoTreeDecomposition {
    pub fn completion_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut e = vec![self.base_edge];
        for &(v, a, b) in &self.order {
            e.push((v, a));
            e.push((v, b));
        }
        for p in e.iter_mut() {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        e.sort_unstable();
        e
    }

    /// Replays the order, checking every step attaches a new vertex to an
    /// existing edge, and returns the completion.
    pub fn replay(&self, n: usize) -> Option<Graph> {
        let (x, y) = self.base_edge;
        if x == y || x >= n || y >= n || self.order.len() + 2 != n {
            return None;
        }
        let mut seen = vec![false; n];
        seen[x] = true;
        seen[y] = true;
        let mut edges: BTreeSet<(Vertex, Vertex)> = BTreeSet::from([(x.min(y), x.max(y))]);
        for &(v, a, b) in &self.order {
            if v >= n || seen[v] || !edges.contains(&(a.min(b), a.max(b))) {
                return None;
            }
            seen[v] = true;
            edges.insert((v.min(a), v.max(a)));
            edges.insert((v.min(b), v.max(b)));
        }
        Graph::from_edges(n, edges).ok()
    }
}

/// 2-tree completion of a connected partial 2-tree on at least two
/// vertices, obtained by undoing its series-parallel reduction.
pub fn two_tree_completion(g: &Graph) -> Result<TwoTreeDecomposition> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Domain("2-tree completion needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (steps, ok) = reduce(g);
    if !ok {
        return Err(Error::NotPartial2Tree);
    }
    let mut rev = steps.into_iter().rev();
    let root = match rev.next() {
        Some(Reduction::Isolated(v)) => v,
        _ => unreachable!("a connected graph reduces to one isolated vertex last"),
    };
    let second = match rev.next() {
        Some(Reduction::Leaf { v, a }) if a == root => v,
        _ => unreachable!("the second to last vertex is a leaf of the last"),
    };
    let mut comp: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
    let link = |comp: &mut Vec<BTreeSet<Vertex>>, a: Vertex, b: Vertex| {
        comp[a].insert(b);
        comp[b].insert(a);
    };
    link(&mut comp, root, second);
    let mut order = Vec::with_capacity(n - 2);
    for step in rev {
        let (v, a, b) = match step {
            Reduction::Series { v, a, b } => (v, a, b),
            Reduction::Leaf { v, a } => {
                let b = *comp[a].iter().next().expect("completion vertex has a neighbour");
                (v, a, b)
            }
            Reduction::Isolated(_) => unreachable!("connected input"),
        };
        link(&mut comp, v, a);
        link(&mut comp, v, b);
        order.push((v, a, b));
    }
    let mut fill_edges = Vec::new();
    for (u, nb) in comp.iter().enumerate() {
        for &v in nb.range(u + 1..) {
            if !g.has_edge(u, v) {
                fill_edges.push((u, v));
            }
        }
    }
    Ok(TwoTreeDecomposition {
        base_edge: (root, second),
        order,
        fill_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, gadget, path, petersen};

    #[test]
    fn recognition() {
        assert!(!is_k4_minor_free(&complete(4).unwrap()));
        assert!(is_k4_minor_free(&gadget(4, 2, 2, 2).unwrap().graph));
        assert!(is_k4_minor_free(&path(6).unwrap()));
        assert!(is_k4_minor_free(&cycle(9).unwrap()));
        assert!(is_k4_minor_free(&Graph::empty(3)));
        assert!(!is_k4_minor_free(&petersen()));
    }

    #[test]
    fn completions() {
        let c5 = two_tree_completion(&cycle(5).unwrap()).unwrap();
        assert_eq!(c5.completion_edges().len(), 7);
        assert_eq!(c5.fill_edges.len(), 2);
        assert!(c5.replay(5).is_some());

        let t = gadget(2, 2, 2, 2).unwrap().graph;
        let d = two_tree_completion(&t).unwrap();
        let h = d.replay(t.n()).unwrap();
        assert_eq!(h.m(), 21);
        assert!(t.edges().all(|(u, v)| h.has_edge(u, v)));

        let tri = complete(3).unwrap();
        assert!(two_tree_completion(&tri).unwrap().fill_edges.is_empty());
        assert_eq!(two_tree_completion(&complete(4).unwrap()), Err(Error::NotPartial2Tree));
        assert_eq!(two_tree_completion(&Graph::empty(3)), Err(Error::Disconnected));
    }
}
