//! The simple undirected graph carrier and the queries built on it.

mod cycles;
mod distance;
pub(crate) mod io;
mod iso;

pub use cycles::{cycles_of_length, exists_cycle_through_pair, odd_girth, shortest_odd_cycle, DEFAULT_CYCLE_BUDGET};
pub use distance::{
    all_pairs_distances, all_pairs_distances_with, bfs_distances, distance_levels, DistanceLevels, DistanceMatrix,
    LevelSets, INFINITE,
};
pub use io::{parse_graph, write_graph};
pub use iso::{iso_check, DEFAULT_ISO_BUDGET};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple, loopless, undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted so that every derived order (edge scans,
/// search orders, certificates) is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    adj_bits: Vec<FixedBitSet>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            adj_bits: vec![FixedBitSet::with_capacity(n); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints. Endpoint order within a pair is irrelevant.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!("edge ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            if g.adj_bits[u].contains(v) {
                return Err(Error::Domain(format!("duplicate edge ({u},{v})")));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but silently merges duplicates. Loops and
    /// out-of-range endpoints still panic: generators call this with edges
    /// they constructed themselves.
    pub(crate) fn from_edges_merged<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            assert!(u < n && v < n && u != v, "bad generated edge ({u},{v})");
            if !g.adj_bits[u].contains(v) {
                g.insert(u, v);
            }
        }
        g.finish();
        g
    }

    fn insert(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.adj_bits[u].insert(v);
        self.adj_bits[v].insert(u);
        self.m += 1;
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: Vertex) -> &FixedBitSet {
        &self.adj_bits[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj_bits[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// A copy of the graph without the edge `uv` (which must exist).
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        assert!(self.has_edge(u, v), "edge ({u},{v}) not present");
        Graph::from_edges_merged(
            self.n(),
            self.edges()
                .filter(|&(a, b)| !((a == u && b == v) || (a == v && b == u))),
        )
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()` in the
    /// given order.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.edges().filter_map(|(u, v)| {
            let (a, b) = (index[u], index[v]);
            (a != usize::MAX && b != usize::MAX).then_some((a, b))
        });
        Graph::from_edges_merged(keep.len(), edges)
    }

    /// A copy without vertex `v`; later vertices shift down by one.
    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let keep: Vec<Vertex> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }
}
