//! The certified decision procedure: does `B` bound the K4-minor-free
//! graphs of odd-girth at least `2k + 1`?

mod check;
mod format;
mod lint;
mod verify;
mod witness;

pub use check::{check_bound, check_bound_with, Answer, BoundOptions, BoundVerdict, DeletionEvent, NoReason};
pub use format::{parse_certificate, write_certificate, write_verdict};
pub use lint::{minimality_lint, LintReport, Violation};
pub use verify::{all_k_good_property, verify_certificate, PropertyCheck};
pub use witness::{gadget_completion, no_certificate, WeightedGraph};

use fixedbitset::FixedBitSet;

use crate::graph::{DistanceMatrix, Graph, LevelSets, Vertex};

/// A weighted pair `u < v` of a partial distance graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: u32,
}

/// A k-partial distance graph of `base`: weighted pairs whose weights are
/// the exact base distances, all at most `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialDistanceGraph {
    pub base: Graph,
    pub k: u32,
    /// Sorted by `(u, v)`.
    pub edges: Vec<WeightedEdge>,
}

impl PartialDistanceGraph {
    /// Every pair at distance `1..=k`.
    pub fn complete(base: &Graph, dist: &DistanceMatrix, k: u32) -> Self {
        PartialDistanceGraph {
            base: base.clone(),
            k,
            edges: complete_pairs(dist, k),
        }
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&(a, b)))
            .ok()
            .map(|i| self.edges[i].weight)
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.weight(u, v).is_some()
    }

    /// Number of pairs per weight, index 0 unused.
    pub fn weight_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.k as usize + 1];
        for e in &self.edges {
            if let Some(slot) = h.get_mut(e.weight as usize) {
                *slot += 1;
            }
        }
        h
    }

    pub fn pruned_levels(&self) -> PrunedLevels {
        self.pruned_levels_for(self.base.n(), self.k)
    }

    /// Weights above `k` are ignored.
    pub(crate) fn pruned_levels_for(&self, n: usize, k: u32) -> PrunedLevels {
        let mut lv = PrunedLevels::new(n, k);
        for e in self.edges.iter().filter(|e| e.weight <= k && e.v < n) {
            lv.insert(e.u, e.v, e.weight);
        }
        lv
    }
}

pub(crate) fn complete_pairs(dist: &DistanceMatrix, k: u32) -> Vec<WeightedEdge> {
    let n = dist.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let d = dist.get(u, v);
            if d >= 1 && d <= k {
                out.push(WeightedEdge { u, v, weight: d });
            }
        }
    }
    out
}

/// Per vertex and weight, the vertices joined to it by a surviving
/// weighted edge of that weight.
#[derive(Clone, Debug)]
pub struct PrunedLevels {
    sets: Vec<Vec<FixedBitSet>>,
}

impl PrunedLevels {
    pub fn new(n: usize, k: u32) -> Self {
        PrunedLevels {
            sets: vec![vec![FixedBitSet::with_capacity(n); k as usize + 1]; n],
        }
    }

    pub fn insert(&mut self, u: Vertex, v: Vertex, w: u32) {
        self.sets[u][w as usize].insert(v);
        self.sets[v][w as usize].insert(u);
    }

    pub fn remove(&mut self, u: Vertex, v: Vertex, w: u32) {
        self.sets[u][w as usize].set(v, false);
        self.sets[v][w as usize].set(u, false);
    }
}

impl LevelSets for PrunedLevels {
    fn level(&self, v: Vertex, d: u32) -> Option<&FixedBitSet> {
        self.sets[v].get(d as usize)
    }
}
