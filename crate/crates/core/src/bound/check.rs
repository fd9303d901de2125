use std::collections::BTreeSet;

use super::{complete_pairs, PartialDistanceGraph, PrunedLevels, WeightedEdge};
use crate::graph::{all_pairs_distances_with, odd_girth, Graph, Vertex};
use crate::par::{self, ScanMode};
use crate::triples::{realized_on_edge, GoodTriple, TripleTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NoReason {
    /// The (possibly reduced) base graph no longer has odd-girth `2k + 1`.
    OddGirthMismatch,
    /// Every weighted edge was pruned.
    Empty,
}

impl NoReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NoReason::OddGirthMismatch => "ODD_GIRTH_MISMATCH",
            NoReason::Empty => "EMPTY",
        }
    }
}

/// One pruning step: the weighted edge `uv` failed to realize `triple`.
/// Weight-1 events delete an edge of the base graph itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeletionEvent {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: u32,
    pub triple: GoodTriple,
}

impl DeletionEvent {
    pub fn is_base_edge(&self) -> bool {
        self.weight == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundVerdict {
    pub answer: Answer,
    pub k: u32,
    pub certificate: Option<PartialDistanceGraph>,
    pub trace: Vec<DeletionEvent>,
    pub final_reason: Option<NoReason>,
}

impl BoundVerdict {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BoundOptions {
    pub mode: ScanMode,
}

pub fn check_bound(b: &Graph, k: u32) -> BoundVerdict {
    check_bound_with(b, k, BoundOptions::default())
}

/// Number of dirty edges evaluated speculatively per parallel round.
const PARALLEL_CHUNK: usize = 2048;

/// Pruning state for one base graph.
struct Scan<'t> {
    table: &'t TripleTable,
    edges: Vec<WeightedEdge>,
    alive: Vec<bool>,
    levels: PrunedLevels,
    incident: Vec<Vec<usize>>,
    dirty: BTreeSet<usize>,
}

impl<'t> Scan<'t> {
    fn new(base: &Graph, k: u32, table: &'t TripleTable, mode: ScanMode) -> Self {
        let dist = all_pairs_distances_with(base, mode);
        let edges = complete_pairs(&dist, k);
        let mut levels = PrunedLevels::new(base.n(), k);
        let mut incident = vec![Vec::new(); base.n()];
        for (i, e) in edges.iter().enumerate() {
            levels.insert(e.u, e.v, e.weight);
            incident[e.u].push(i);
            incident[e.v].push(i);
        }
        Scan {
            table,
            alive: vec![true; edges.len()],
            dirty: (0..edges.len()).collect(),
            edges,
            levels,
            incident,
        }
    }

    /// First k-good triple (in triple order) not realized on edge `i`.
    fn first_failure(&self, i: usize) -> Option<GoodTriple> {
        let e = self.edges[i];
        self.table
            .for_weight(e.weight)
            .iter()
            .find(|&&(_, q, r)| !realized_on_edge(&self.levels, e.u, e.v, q, r))
            .map(|&(t, _, _)| t)
    }

    fn delete(&mut self, i: usize) {
        let e = self.edges[i];
        self.alive[i] = false;
        self.dirty.remove(&i);
        self.levels.remove(e.u, e.v, e.weight);
        for &x in [e.u, e.v].iter() {
            for &j in &self.incident[x] {
                if self.alive[j] {
                    self.dirty.insert(j);
                }
            }
        }
    }

    /// Finds the lexicographically first failing edge, marking every edge
    /// verified before it as clean. Alive clean edges always pass, so this
    /// is the edge a full restart of the scan would stop at.
    fn next_failure(&mut self, mode: ScanMode) -> Option<(usize, GoodTriple)> {
        if !mode.is_parallel() {
            while let Some(&i) = self.dirty.iter().next() {
                match self.first_failure(i) {
                    Some(t) => return Some((i, t)),
                    None => {
                        self.dirty.remove(&i);
                    }
                }
            }
            return None;
        }
        while !self.dirty.is_empty() {
            let chunk: Vec<usize> = self.dirty.iter().take(PARALLEL_CHUNK).copied().collect();
            let results = par::map_slice(mode, &chunk, |&i| self.first_failure(i));
            let mut found = None;
            for (&i, res) in chunk.iter().zip(results) {
                match res {
                    None => {
                        self.dirty.remove(&i);
                    }
                    Some(t) if found.is_none() => found = Some((i, t)),
                    Some(_) => {}
                }
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Runs the pruning decision procedure on `b` for odd-girth `2k + 1`.
///
/// Weighted edges are scanned in lexicographic order and triples in sorted
/// order. A failing edge of weight at least 2 is removed and the scan
/// restarts; a failing edge of weight 1 is removed from `b` itself and the
/// whole procedure reruns on the smaller graph.
pub fn check_bound_with(b: &Graph, k: u32, opts: BoundOptions) -> BoundVerdict {
    let table = TripleTable::new(k);
    let mut base = b.clone();
    let mut trace = Vec::new();
    let no = |trace, reason| BoundVerdict {
        answer: Answer::No,
        k,
        certificate: None,
        trace,
        final_reason: Some(reason),
    };
    'base: loop {
        if k == 0 || odd_girth(&base) != Some(2 * k + 1) {
            return no(trace, NoReason::OddGirthMismatch);
        }
        let mut scan = Scan::new(&base, k, &table, opts.mode);
        while let Some((i, triple)) = scan.next_failure(opts.mode) {
            let e = scan.edges[i];
            trace.push(DeletionEvent {
                u: e.u,
                v: e.v,
                weight: e.weight,
                triple,
            });
            if e.weight >= 2 {
                scan.delete(i);
            } else {
                base = base.without_edge(e.u, e.v);
                continue 'base;
            }
        }
        let edges: Vec<WeightedEdge> = scan
            .edges
            .iter()
            .zip(&scan.alive)
            .filter_map(|(e, &a)| a.then_some(*e))
            .collect();
        if edges.is_empty() {
            return no(trace, NoReason::Empty);
        }
        return BoundVerdict {
            answer: Answer::Yes,
            k,
            certificate: Some(PartialDistanceGraph { base, k, edges }),
            trace,
            final_reason: None,
        };
    }
}
