//! Exhaustive homomorphism search with forward checking, independent
//! solving of disconnected remainders and a cache of failed remainders.

use std::collections::HashSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_num};
use crate::graph::{all_pairs_distances, Graph, Vertex, INFINITE};

/// A failed remainder: its vertex set and the images of its assigned
/// neighbours.
type Nogood = (Vec<Vertex>, Vec<(Vertex, Vertex)>);

/// Larger remainders are not cached.
const NOGOOD_MAX_PIECE: usize = 4096;

pub const DEFAULT_HOM_BUDGET: u64 = 100_000_000;

/// A vertex map `V(G) -> V(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    pub map: Vec<Vertex>,
}

/// Whether `m` sends every edge of `g` to an edge of `h`.
pub fn is_hom(g: &Graph, h: &Graph, m: &Homomorphism) -> bool {
    m.map.len() == g.n() && m.map.iter().all(|&x| x < h.n()) && g.edges().all(|(u, v)| h.has_edge(m.map[u], m.map[v]))
}

pub fn write_hom(m: &Homomorphism, n_target: usize) -> String {
    let mut out = format!("hom {} {}\n", m.map.len(), n_target);
    for (u, x) in m.map.iter().enumerate() {
        let _ = writeln!(out, "m {u} {x}");
    }
    out
}

/// Parses `hom <nG> <nH>` followed by one `m <u> <image>` line per vertex.
/// Returns the map and `nH`.
pub fn parse_hom(text: &str) -> Result<(Homomorphism, usize)> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("hom") {
        return Err(Error::parse(no, "expected `hom <nG> <nH>`"));
    }
    let ng: usize = parse_num(no, toks.next(), "source order")?;
    let nh: usize = parse_num(no, toks.next(), "target order")?;
    let mut map = vec![None; ng];
    for (no, line) in lines {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("m") {
            return Err(Error::parse(no, "expected `m <u> <image>`"));
        }
        let u: usize = parse_num(no, toks.next(), "vertex")?;
        let x: usize = parse_num(no, toks.next(), "image")?;
        if u >= ng || x >= nh {
            return Err(Error::parse(no, "vertex out of range"));
        }
        if map[u].replace(x).is_some() {
            return Err(Error::parse(no, "vertex mapped twice"));
        }
    }
    let map = map
        .into_iter()
        .enumerate()
        .map(|(u, x)| x.ok_or_else(|| Error::parse(0, format!("vertex {u} unmapped"))))
        .collect::<Result<_>>()?;
    Ok((Homomorphism { map }, nh))
}

struct Search<'a> {
    g: &'a Graph,
    /// `near[u]`: vertices `w != u` with `d_G(u, w) < reach`, and that
    /// distance. Farther vertices are not constrained by the filter.
    near: Vec<Vec<(Vertex, u32)>>,
    /// `ball[x][d]`: target vertices within distance `d` of `x`, for
    /// `d <= reach`. Index 1 is replaced by the open neighbourhood.
    ball: Vec<Vec<FixedBitSet>>,
    injective: bool,
    budget: u64,
    nodes: u64,
    domains: Vec<FixedBitSet>,
    assigned: Vec<Option<Vertex>>,
    placed: Vec<Vertex>,
    trail: Vec<(Vertex, FixedBitSet)>,
    mark: Vec<usize>,
    epoch: usize,
    failed: HashSet<Nogood>,
}

/// Vertices within distance `radius` of `s`, with their distances.
fn truncated_bfs(g: &Graph, s: Vertex, radius: u32, seen: &mut [u32], stamp: u32) -> Vec<(Vertex, u32)> {
    let mut out = Vec::new();
    let mut frontier = vec![s];
    seen[s] = stamp;
    for d in 1..=radius {
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if seen[w] != stamp {
                    seen[w] = stamp;
                    next.push(w);
                    out.push((w, d));
                }
            }
        }
        frontier = next;
    }
    out
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, h: &Graph, injective: bool, budget: u64) -> Self {
        let dh = all_pairs_distances(h);
        let reach = (0..h.n())
            .flat_map(|x| dh.row(x).iter().copied())
            .filter(|&d| d != INFINITE)
            .max()
            .unwrap_or(0)
            .max(1);
        // Within distance `reach` the ball is all of the component, so the
        // filter only bites below it; adjacency needs radius 1 regardless.
        let radius = (reach - 1).max(1);
        let mut seen = vec![0u32; g.n()];
        let near = (0..g.n())
            .map(|u| truncated_bfs(g, u, radius, &mut seen, u as u32 + 1))
            .collect();
        let ball = (0..h.n())
            .map(|x| {
                let row = dh.row(x);
                (0..=reach)
                    .map(|d| {
                        if d == 1 {
                            return h.neighbor_set(x).clone();
                        }
                        let mut s = FixedBitSet::with_capacity(h.n());
                        s.extend((0..h.n()).filter(|&y| row[y] <= d));
                        s
                    })
                    .collect()
            })
            .collect();
        let mut full = FixedBitSet::with_capacity(h.n());
        full.insert_range(..);
        Search {
            g,
            near,
            ball,
            injective,
            budget,
            nodes: 0,
            domains: vec![full; g.n()],
            assigned: vec![None; g.n()],
            placed: Vec::new(),
            trail: Vec::new(),
            mark: vec![0; g.n()],
            epoch: 0,
            failed: HashSet::new(),
        }
    }

    /// Forced vertices first, then vertices touching the placed region, then
    /// lowest id. Witnesses are numbered outward from their core, so this
    /// fixes attachment vertices before gadget interiors and lets `split`
    /// detach whole gadgets; smallest-domain ordering dives into interiors.
    fn pick(&self, part: &[Vertex]) -> Vertex {
        *part
            .iter()
            .min_by_key(|&&u| {
                let touching = self.g.neighbors(u).iter().any(|&w| self.assigned[w].is_some());
                (self.domains[u].count_ones(..) > 1, !touching, u)
            })
            .expect("nonempty part")
    }

    fn narrow(&mut self, w: Vertex, filter: Option<&FixedBitSet>, x: Vertex) -> bool {
        let hit_x = self.injective && self.domains[w].contains(x);
        let shrinks = filter.is_some_and(|f| !self.domains[w].is_subset(f));
        if !shrinks && !hit_x {
            return true;
        }
        self.trail.push((w, self.domains[w].clone()));
        if let Some(f) = filter {
            self.domains[w].intersect_with(f);
        }
        if self.injective {
            self.domains[w].set(x, false);
        }
        !self.domains[w].is_clear()
    }

    /// Narrows the other domains after `u -> x`; false on a wipe-out.
    fn propagate(&mut self, u: Vertex, x: Vertex) -> bool {
        let ball = std::mem::take(&mut self.ball);
        let near = std::mem::take(&mut self.near);
        let mut ok = true;
        for &(w, d) in &near[u] {
            if self.assigned[w].is_none() && !self.narrow(w, Some(&ball[x][d as usize]), x) {
                ok = false;
                break;
            }
        }
        if ok && self.injective {
            for w in 0..self.g.n() {
                if self.assigned[w].is_none() && !self.narrow(w, None, x) {
                    ok = false;
                    break;
                }
            }
        }
        self.ball = ball;
        self.near = near;
        ok
    }

    fn undo(&mut self, trail: usize, placed: usize) {
        while self.trail.len() > trail {
            let (w, d) = self.trail.pop().expect("trail above mark");
            self.domains[w] = d;
        }
        while self.placed.len() > placed {
            let u = self.placed.pop().expect("placed above mark");
            self.assigned[u] = None;
        }
    }

    /// Splits the unassigned vertices of `part` into the components of the
    /// subgraph they induce.
    fn split(&mut self, part: &[Vertex]) -> Vec<Vec<Vertex>> {
        self.epoch += 1;
        let mut out = Vec::new();
        for &s in part {
            if self.assigned[s].is_some() || self.mark[s] == self.epoch {
                continue;
            }
            self.mark[s] = self.epoch;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &y in self.g.neighbors(comp[i]) {
                    if self.assigned[y].is_none() && self.mark[y] != self.epoch {
                        self.mark[y] = self.epoch;
                        comp.push(y);
                    }
                }
                i += 1;
            }
            out.push(comp);
        }
        out
    }

    /// Assigns every vertex of `part`. Independent pieces are solved one
    /// after another and a failing piece fails the whole call: without
    /// injectivity no choice made elsewhere can rescue it.
    fn solve(&mut self, part: &[Vertex]) -> Result<bool> {
        let pieces = self.split(part);
        if pieces.len() > 1 && !self.injective {
            let (trail, placed) = (self.trail.len(), self.placed.len());
            let mut order = pieces;
            order.sort_by_key(|p| p.len());
            for piece in order {
                if !self.solve_piece(piece)? {
                    self.undo(trail, placed);
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let rest: Vec<Vertex> = pieces.into_iter().flatten().collect();
        if rest.is_empty() {
            return Ok(true);
        }
        self.branch(&rest)
    }

    /// Images of the assigned neighbours of `piece`, sorted.
    fn boundary(&self, piece: &[Vertex]) -> Vec<(Vertex, Vertex)> {
        let mut b: Vec<_> = piece
            .iter()
            .flat_map(|&u| self.g.neighbors(u))
            .filter_map(|&w| self.assigned[w].map(|x| (w, x)))
            .collect();
        b.sort_unstable();
        b.dedup();
        b
    }

    /// Solves one connected remainder, consulting and filling the cache of
    /// failures. A failure depends only on the boundary images: every
    /// edge leaving the piece ends in the boundary, and the distance filter
    /// never removes a value used by a full homomorphism.
    fn solve_piece(&mut self, mut piece: Vec<Vertex>) -> Result<bool> {
        if piece.len() > NOGOOD_MAX_PIECE {
            return self.branch(&piece);
        }
        piece.sort_unstable();
        let boundary = self.boundary(&piece);
        let key = (piece, boundary);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let ok = self.branch(&key.0)?;
        if !ok {
            self.failed.insert(key);
        }
        Ok(ok)
    }

    fn branch(&mut self, rest: &[Vertex]) -> Result<bool> {
        let u = self.pick(rest);
        let candidates: Vec<Vertex> = self.domains[u].ones().collect();
        for x in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let (trail, placed) = (self.trail.len(), self.placed.len());
            self.assigned[u] = Some(x);
            self.placed.push(u);
            if self.propagate(u, x) && self.solve(rest)? {
                return Ok(true);
            }
            self.undo(trail, placed);
        }
        Ok(false)
    }
}

/// Searches for a homomorphism `g -> h` (injective if requested). Domains
/// are filtered by adjacency and by `d_H(f(u), f(w)) <= d_G(u, w)`.
/// `Ok(None)` is a proof of non-existence; running out of `budget` search
/// nodes is an error.
pub fn hom_search(g: &Graph, h: &Graph, injective: bool, budget: u64) -> Result<Option<Homomorphism>> {
    if g.n() == 0 {
        return Ok(Some(Homomorphism { map: Vec::new() }));
    }
    if h.n() == 0 || (injective && g.n() > h.n()) {
        return Ok(None);
    }
    let mut s = Search::new(g, h, injective, budget);
    let all: Vec<Vertex> = (0..g.n()).collect();
    if !s.solve(&all)? {
        return Ok(None);
    }
    let map = s
        .assigned
        .into_iter()
        .map(|x| x.expect("complete assignment"))
        .collect();
    Ok(Some(Homomorphism { map }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{clebsch, complete, cycle, gadget, grotzsch};

    #[test]
    fn oracle_examples() {
        let c5 = cycle(5).unwrap();
        let t = gadget(2, 2, 2, 2).unwrap().graph;
        assert_eq!(hom_search(&t, &c5, false, DEFAULT_HOM_BUDGET).unwrap(), None);
        let m = hom_search(&c5, &c5, false, DEFAULT_HOM_BUDGET).unwrap().unwrap();
        assert!(is_hom(&c5, &c5, &m));
        let m = hom_search(&grotzsch(), &clebsch(), true, DEFAULT_HOM_BUDGET)
            .unwrap()
            .unwrap();
        assert!(is_hom(&grotzsch(), &clebsch(), &m));
        let mut seen = m.map.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 11);
    }

    #[test]
    fn validator() {
        let k3 = complete(3).unwrap();
        assert!(is_hom(&k3, &k3, &Homomorphism { map: vec![0, 1, 2] }));
        assert!(!is_hom(&k3, &k3, &Homomorphism { map: vec![0, 0, 0] }));
    }

    #[test]
    fn budget_and_format() {
        let k4 = complete(4).unwrap();
        assert!(matches!(
            hom_search(&complete(6).unwrap(), &k4, false, 5),
            Err(Error::BudgetExceeded(5))
        ));
        let m = Homomorphism { map: vec![2, 0, 1] };
        let (back, nh) = parse_hom(&write_hom(&m, 3)).unwrap();
        assert_eq!((back, nh), (m, 3));
        assert!(parse_hom("hom 2 2\nm 0 1\n").is_err());
    }
}
