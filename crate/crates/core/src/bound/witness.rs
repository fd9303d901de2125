//! NO-witnesses: K4-minor-free graphs of odd-girth at least `2k + 1` that
//! do not map to the rejected candidate, built by replaying the pruning
//! trace backwards and gluing gadgets onto weighted 2-trees.

use super::{complete_pairs, Answer, BoundVerdict, DeletionEvent, NoReason, PrunedLevels};
use crate::error::{Error, Result};
use crate::families::gadget;
use crate::graph::{all_pairs_distances, bfs_distances, Graph, LevelSets, Vertex};
use crate::triples::{is_k_good, realized_on_edge, GoodTriple};

/// A graph whose every edge carries a weight. Edges are stored once with
/// `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex, u32)>,
}

impl WeightedGraph {
    /// The underlying graph of weight-1 edges.
    pub fn unit_subgraph(&self) -> Graph {
        Graph::from_edges_merged(self.n, self.edges.iter().filter(|e| e.2 == 1).map(|&(u, v, _)| (u, v)))
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.iter().find(|e| (e.0, e.1) == (a, b)).map(|e| e.2)
    }

    /// Odd cycle `0..2k+1` fanned from vertex 0, weighted by cycle distance.
    fn fan_cycle(k: u32) -> Self {
        let len = 2 * k as usize + 1;
        let mut edges: Vec<_> = (0..len)
            .map(|i| (i.min((i + 1) % len), i.max((i + 1) % len), 1))
            .collect();
        for i in 2..len - 1 {
            edges.push((0, i, i.min(len - i) as u32));
        }
        edges.sort_unstable();
        WeightedGraph { n: len, edges }
    }
}

/// Weighted 2-tree completion of T_{2k+1}(p, q, r): each of the three hub
/// cycles is fanned from its first hub and every edge is weighted by its
/// distance in the gadget. Hubs are `0, 1, 2` as in `families::gadget`;
/// the edge `01` has weight `p`.
pub fn gadget_completion(k: u32, p: u32, q: u32, r: u32) -> Result<WeightedGraph> {
    if !is_k_good(p, q, r, k)? {
        return Err(Error::Domain(format!("({p},{q},{r}) is not {k}-good")));
    }
    let t = gadget(k, p, q, r)?;
    let mut pairs = Vec::new();
    for pair in t.paths.chunks(2) {
        // Cycle starting at the hub: short path, then long path reversed.
        let mut cyc = pair[0].clone();
        cyc.extend(pair[1].iter().rev().skip(1).take(pair[1].len() - 2));
        let len = cyc.len();
        for i in 0..len {
            pairs.push((cyc[i], cyc[(i + 1) % len]));
        }
        for &c in &cyc[2..len - 1] {
            pairs.push((cyc[0], c));
        }
    }
    let mut edges = Vec::with_capacity(pairs.len());
    let dist: Vec<Vec<u32>> = (0..t.graph.n()).map(|s| bfs_distances(&t.graph, s)).collect();
    for (a, b) in pairs {
        let d = dist[a][b];
        debug_assert!((1..=k).contains(&d), "a (2k+1)-cycle chord spans at most k");
        edges.push((a.min(b), a.max(b), d));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(WeightedGraph { n: t.graph.n(), edges })
}

fn fresh_levels(g: &Graph, k: u32) -> (PrunedLevels, usize) {
    let pairs = complete_pairs(&all_pairs_distances(g), k);
    let mut lv = PrunedLevels::new(g.n(), k);
    for e in &pairs {
        lv.insert(e.u, e.v, e.weight);
    }
    (lv, pairs.len())
}

/// Whether `events` is a valid pruning sequence for `b` ending in a NO
/// state: each edge is still present with its weight and fails its triple
/// when its turn comes, and at the end the base has lost odd-girth
/// `2k + 1` or no weighted edge is left.
fn proves_no(b: &Graph, k: u32, events: &[DeletionEvent]) -> bool {
    let mut base = b.clone();
    let (mut levels, mut alive) = fresh_levels(&base, k);
    for e in events {
        let present = levels.level(e.u, e.weight).is_some_and(|s| s.contains(e.v));
        let Some((q, r)) = e.triple.others(e.weight) else {
            return false;
        };
        if !present || realized_on_edge(&levels, e.u, e.v, q, r) {
            return false;
        }
        if e.is_base_edge() {
            base = base.without_edge(e.u, e.v);
            (levels, alive) = fresh_levels(&base, k);
        } else {
            levels.remove(e.u, e.v, e.weight);
            alive -= 1;
        }
    }
    alive == 0 || crate::graph::odd_girth(&base) != Some(2 * k + 1)
}

/// Drops events, latest first, while the rest still proves NO. Every
/// gluing layer multiplies the witness size, so shorter proofs matter.
fn shorten(b: &Graph, k: u32, trace: &[DeletionEvent]) -> Vec<DeletionEvent> {
    let mut events = trace.to_vec();
    let mut i = events.len();
    while i > 0 {
        i -= 1;
        let mut fewer = events.clone();
        fewer.remove(i);
        if proves_no(b, k, &fewer) {
            events = fewer;
        }
    }
    events
}

/// One gluing step of the backwards replay: weight and triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct GlueStep {
    weight: u32,
    triple: GoodTriple,
}

/// Replays the trace forwards and merges runs of pruning events with the
/// same weight and triple whose edges all already fail that triple before
/// the run starts. One gadget layer then rules out the whole run.
fn glue_steps(b: &Graph, k: u32, trace: &[DeletionEvent]) -> Vec<GlueStep> {
    let mut base = b.clone();
    let fresh = |g: &Graph| fresh_levels(g, k).0;
    let mut levels = fresh(&base);
    let mut steps = Vec::new();
    let mut i = 0;
    while i < trace.len() {
        let ev = trace[i];
        steps.push(GlueStep {
            weight: ev.weight,
            triple: ev.triple,
        });
        if ev.is_base_edge() {
            base = base.without_edge(ev.u, ev.v);
            levels = fresh(&base);
            i += 1;
            continue;
        }
        let start = levels.clone();
        let (q, r) = ev.triple.others(ev.weight).expect("trace triple contains its weight");
        let mut j = i;
        while j < trace.len() {
            let e = trace[j];
            let same = e.weight == ev.weight && e.triple == ev.triple;
            if !same || (j > i && realized_on_edge(&start, e.u, e.v, q, r)) {
                break;
            }
            levels.remove(e.u, e.v, e.weight);
            j += 1;
        }
        i = j;
    }
    steps
}

/// Builds a NO-witness for a NO verdict: starting from a fanned
/// `(2k+1)`-cycle, replays the pruning steps in reverse, gluing copies of
/// the weighted gadget completion (one per orientation) onto every edge of
/// the step's weight. Returns the weight-1 subgraph.
///
/// Fails with `CapExceeded` once the graph would exceed `vertex_cap`
/// vertices, and with `PreconditionViolated` when no witness exists (YES
/// verdicts, or an input whose odd-girth is already below `2k + 1`).
pub fn no_certificate(b: &Graph, k: u32, verdict: &BoundVerdict, vertex_cap: usize) -> Result<Graph> {
    if verdict.answer != Answer::No || k == 0 {
        return Err(Error::PreconditionViolated(
            "no-witness needs a NO verdict and k >= 1".into(),
        ));
    }
    if verdict.trace.is_empty() && verdict.final_reason == Some(NoReason::OddGirthMismatch) {
        if let Some(g) = crate::graph::odd_girth(b) {
            if g < 2 * k + 1 {
                return Err(Error::PreconditionViolated(format!(
                    "odd-girth {g} is below {}; the odd cycle maps into the input",
                    2 * k + 1
                )));
            }
        }
    }
    let mut g = WeightedGraph::fan_cycle(k);
    if g.n > vertex_cap {
        return Err(Error::CapExceeded(vertex_cap));
    }
    let proof = shorten(b, k, &verdict.trace);
    let steps = glue_steps(b, k, &proof);
    for step in steps.iter().rev() {
        let t = step.triple;
        let (q, r) = t.others(step.weight).expect("trace triple contains its weight");
        let piece = gadget_completion(k, step.weight, q, r)?;
        glue_everywhere(&mut g, &piece, step.weight, q != r, vertex_cap)?;
    }
    Ok(g.unit_subgraph())
}

/// With `q == r` the triple test is symmetric in the edge's ends, so one
/// orientation suffices.
fn glue_everywhere(g: &mut WeightedGraph, piece: &WeightedGraph, p: u32, both: bool, cap: usize) -> Result<()> {
    let targets: Vec<(Vertex, Vertex)> = g.edges.iter().filter(|e| e.2 == p).map(|e| (e.0, e.1)).collect();
    let fresh_per_copy = piece.n - 2;
    let total = targets
        .len()
        .checked_mul(if both { 2 } else { 1 } * fresh_per_copy)
        .and_then(|x| x.checked_add(g.n))
        .ok_or(Error::CapExceeded(cap))?;
    if total > cap {
        return Err(Error::CapExceeded(cap));
    }
    let mut map = vec![0; piece.n];
    for (x, y) in targets {
        let orientations = if both { &[(x, y), (y, x)][..] } else { &[(x, y)][..] };
        for &(a, b) in orientations {
            map[0] = a;
            map[1] = b;
            for slot in map.iter_mut().skip(2) {
                *slot = g.n;
                g.n += 1;
            }
            for &(s, t, w) in &piece.edges {
                if (s, t) == (0, 1) {
                    continue;
                }
                let (ms, mt) = (map[s], map[t]);
                g.edges.push((ms.min(mt), ms.max(mt), w));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::check_bound;
    use crate::families::cycle;
    use crate::graph::odd_girth;
    use crate::triples::enumerate_k_good;

    #[test]
    fn completion_shapes() {
        for k in 1..=4 {
            for t in enumerate_k_good(k) {
                let c = gadget_completion(k, t.p, t.q, t.r).unwrap();
                assert_eq!(c.n, 6 * k as usize);
                assert_eq!(c.edges.len(), 12 * k as usize - 3);
                assert_eq!(c.weight(0, 1), Some(t.p));
                assert_eq!(c.weight(0, 2), Some(t.q));
                assert_eq!(c.weight(1, 2), Some(t.r));
            }
        }
        assert!(gadget_completion(3, 1, 1, 3).is_err());
    }

    #[test]
    fn fan_cycle_weights() {
        let c = WeightedGraph::fan_cycle(2);
        assert_eq!(c.edges.len(), 7);
        assert_eq!(c.weight(0, 2), Some(2));
        assert_eq!(c.weight(0, 3), Some(2));
    }

    #[test]
    fn gate_case_is_the_cycle() {
        let b = cycle(9).unwrap();
        let v = check_bound(&b, 2);
        let w = no_certificate(&b, 2, &v, 100).unwrap();
        assert_eq!((w.n(), w.m(), odd_girth(&w)), (5, 5, Some(5)));
        let tri = cycle(3).unwrap();
        assert!(no_certificate(&tri, 2, &check_bound(&tri, 2), 100).is_err());
    }

    #[test]
    fn c5_witness_fits_the_cap() {
        let b = cycle(5).unwrap();
        let v = check_bound(&b, 2);
        let w = no_certificate(&b, 2, &v, 10_000).unwrap();
        assert!(w.n() < 10_000);
        assert_eq!(odd_girth(&w), Some(5));
        assert!(matches!(no_certificate(&b, 2, &v, 50), Err(Error::CapExceeded(50))));
    }
}
