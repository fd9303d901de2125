//! Edge-colourings: the Cayley colouring of projective cubes, colourings
//! pulled back along embeddings, and super-proper 5-edge-colourings of
//! 5-regular graphs with a rotation system.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::families::projective_cube;
use crate::graph::io::{content_lines, parse_num};
use crate::graph::{cycles_of_length, Graph, Vertex};
use crate::sp::Homomorphism;

/// A colour per edge, aligned with the lexicographic edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColouring {
    pub edges: Vec<(Vertex, Vertex)>,
    pub colour: Vec<u32>,
    pub count: u32,
}

impl EdgeColouring {
    pub fn colour_of(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.colour[i])
    }

    /// Every edge of `g` is coloured and incident edges differ.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.edges.len() != g.m() || !g.edges().eq(self.edges.iter().copied()) {
            return false;
        }
        (0..g.n()).all(|v| {
            let mut seen = 0u64;
            g.neighbors(v).iter().all(|&u| match self.colour_of(u, v) {
                Some(c) if c < 64 && seen & (1 << c) == 0 => {
                    seen |= 1 << c;
                    true
                }
                _ => false,
            })
        })
    }

    pub fn write(&self) -> String {
        let mut out = format!("col {}\n", self.count);
        for (&(u, v), c) in self.edges.iter().zip(&self.colour) {
            let _ = writeln!(out, "ce {u} {v} {c}");
        }
        out
    }
}

/// Colour of the projective-cube edge `xy`: `i` for the unit vector
/// `e_{i+1}`, `2k` for the all-ones vector, `None` for a non-edge.
fn generator_label(x: u64, y: u64, k: u32) -> Option<u32> {
    let d = x ^ y;
    let ones = (1u64 << (2 * k)) - 1;
    if d == ones {
        Some(2 * k)
    } else if d.is_power_of_two() && d < ones {
        Some(d.trailing_zeros())
    } else {
        None
    }
}

/// The projective cube of dimension `2k` with each edge coloured by its
/// generator.
pub fn cayley_edge_labels(k: u32) -> Result<(Graph, EdgeColouring)> {
    let g = projective_cube(k)?;
    let edges: Vec<_> = g.edges().collect();
    let colour = edges
        .iter()
        .map(|&(u, v)| generator_label(u as u64, v as u64, k).expect("cube edge has a generator"))
        .collect();
    Ok((
        g,
        EdgeColouring {
            edges,
            colour,
            count: 2 * k + 1,
        },
    ))
}

/// Pulls the Cayley colouring back along an injective homomorphism of `g`
/// into the projective cube of dimension `2k`.
pub fn induced_colouring(g: &Graph, k: u32, emb: &Homomorphism) -> Result<EdgeColouring> {
    if k == 0 || k > 31 || emb.map.len() != g.n() {
        return Err(Error::NotEmbedding);
    }
    let size = 1u64 << (2 * k);
    let mut images: Vec<u64> = emb.map.iter().map(|&x| x as u64).collect();
    if images.iter().any(|&x| x >= size) {
        return Err(Error::NotEmbedding);
    }
    images.sort_unstable();
    if images.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NotEmbedding);
    }
    let edges: Vec<_> = g.edges().collect();
    let colour = edges
        .iter()
        .map(|&(u, v)| generator_label(emb.map[u] as u64, emb.map[v] as u64, k).ok_or(Error::NotEmbedding))
        .collect::<Result<_>>()?;
    Ok(EdgeColouring {
        edges,
        colour,
        count: 2 * k + 1,
    })
}

/// The embedding of [`crate::families::c8pp`] into PC(4) that walks the
/// 8-cycle through `0000, 0001, 0011, 0111, 1111, 1110, 1100, 1000`; both
/// chords become all-ones edges.
pub fn c8pp_embedding() -> Homomorphism {
    Homomorphism {
        map: vec![0b0000, 0b0001, 0b0011, 0b0111, 0b1111, 0b1110, 0b1100, 0b1000],
    }
}

/// Colour sequences of all `len`-cycles of `g`, each reduced to its least
/// rotation or reflection.
pub fn cyclic_colour_orders(g: &Graph, col: &EdgeColouring, len: usize) -> Result<BTreeSet<Vec<u32>>> {
    let mut out = BTreeSet::new();
    for cyc in cycles_of_length(g, len) {
        let seq = (0..len)
            .map(|i| col.colour_of(cyc[i], cyc[(i + 1) % len]).ok_or(Error::NotEmbedding))
            .collect::<Result<Vec<u32>>>()?;
        let mut rev = seq.clone();
        rev.reverse();
        let best = (0..len)
            .flat_map(|i| {
                let mut a = seq.clone();
                a.rotate_left(i);
                let mut b = rev.clone();
                b.rotate_left(i);
                [a, b]
            })
            .min()
            .expect("nonempty cycle");
        out.insert(best);
    }
    Ok(out)
}

/// Cyclic order of the edges around each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    pub order: Vec<Vec<Vertex>>,
}

impl RotationSystem {
    /// Each list must be a permutation of the vertex's neighbours.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.order.len() == g.n()
            && self.order.iter().enumerate().all(|(v, ns)| {
                let mut s = ns.clone();
                s.sort_unstable();
                s == g.neighbors(v)
            })
    }

    pub fn write(&self) -> String {
        let mut out = format!("rot {}\n", self.order.len());
        for (v, ns) in self.order.iter().enumerate() {
            let ns: Vec<String> = ns.iter().map(|u| u.to_string()).collect();
            let _ = writeln!(out, "v {v}: {}", ns.join(" "));
        }
        out
    }

    /// Parses `rot <n>` and `v <u>: <w1> <w2> ...` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (no, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
        let mut toks = header.split_whitespace();
        if toks.next() != Some("rot") {
            return Err(Error::parse(no, "expected `rot <n>`"));
        }
        let n: usize = parse_num(no, toks.next(), "vertex count")?;
        let mut order = vec![None; n];
        for (no, line) in lines {
            let (head, tail) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(no, "expected `v <u>: ...`"))?;
            let mut toks = head.split_whitespace();
            if toks.next() != Some("v") {
                return Err(Error::parse(no, "expected `v <u>: ...`"));
            }
            let v: usize = parse_num(no, toks.next(), "vertex")?;
            if v >= n {
                return Err(Error::parse(no, "vertex out of range"));
            }
            let ns = tail
                .split_whitespace()
                .map(|t| parse_num::<usize>(no, Some(t), "neighbour"))
                .collect::<Result<Vec<_>>>()?;
            if order[v].replace(ns).is_some() {
                return Err(Error::parse(no, "vertex listed twice"));
            }
        }
        let order = order
            .into_iter()
            .enumerate()
            .map(|(v, o)| o.ok_or_else(|| Error::parse(0, format!("vertex {v} has no rotation"))))
            .collect::<Result<_>>()?;
        Ok(RotationSystem { order })
    }
}

const COLOURS: u32 = 5;

/// Searches for a proper 5-edge-colouring in which, at every vertex, no two
/// edges consecutive in the rotation (including last/first) carry the two
/// colours of a forbidden pair. `Ok(None)` means none exists.
pub fn super_proper_search(
    g: &Graph,
    rot: &RotationSystem,
    forbidden: &[(u32, u32)],
    budget: u64,
) -> Result<Option<EdgeColouring>> {
    if (0..g.n()).any(|v| g.degree(v) != COLOURS as usize) {
        return Err(Error::Domain("super-proper colouring needs a 5-regular graph".into()));
    }
    if !rot.is_valid_for(g) {
        return Err(Error::Domain("rotation system does not match the graph".into()));
    }
    if forbidden.iter().any(|&(a, b)| a >= COLOURS || b >= COLOURS || a == b) {
        return Err(Error::Domain(
            "forbidden pairs must be two distinct colours below 5".into(),
        ));
    }
    let edges: Vec<_> = g.edges().collect();
    let index = |u: Vertex, v: Vertex| edges.binary_search(&(u.min(v), u.max(v))).expect("edge");
    // Per edge: incident edges, and rotation-consecutive edges.
    let mut incident = vec![Vec::new(); edges.len()];
    let mut consecutive = vec![Vec::new(); edges.len()];
    for (v, ns) in rot.order.iter().enumerate() {
        let ids: Vec<usize> = ns.iter().map(|&u| index(u, v)).collect();
        for (i, &e) in ids.iter().enumerate() {
            incident[e].extend(ids.iter().copied().filter(|&f| f != e));
            let next = ids[(i + 1) % ids.len()];
            consecutive[e].push(next);
            consecutive[next].push(e);
        }
    }
    let mut partner = [u8::MAX; COLOURS as usize];
    for &(a, b) in forbidden {
        partner[a as usize] = b as u8;
        partner[b as usize] = a as u8;
    }
    let mut s = ColourSearch {
        incident,
        consecutive,
        partner,
        colour: vec![None; edges.len()],
        nodes: 0,
        budget,
    };
    if !s.run()? {
        return Ok(None);
    }
    let colour = s.colour.into_iter().map(|c| c.expect("complete") as u32).collect();
    Ok(Some(EdgeColouring {
        edges,
        colour,
        count: COLOURS,
    }))
}

struct ColourSearch {
    incident: Vec<Vec<usize>>,
    consecutive: Vec<Vec<usize>>,
    partner: [u8; COLOURS as usize],
    colour: Vec<Option<u8>>,
    nodes: u64,
    budget: u64,
}

impl ColourSearch {
    fn allowed(&self, e: usize) -> u8 {
        let mut mask = (1u8 << COLOURS) - 1;
        for &f in &self.incident[e] {
            if let Some(c) = self.colour[f] {
                mask &= !(1 << c);
            }
        }
        for &f in &self.consecutive[e] {
            if let Some(c) = self.colour[f] {
                let p = self.partner[c as usize];
                if p != u8::MAX {
                    mask &= !(1 << p);
                }
            }
        }
        mask
    }

    fn run(&mut self) -> Result<bool> {
        let mut best: Option<(u32, usize, u8)> = None;
        for e in 0..self.colour.len() {
            if self.colour[e].is_none() {
                let m = self.allowed(e);
                if best.is_none_or(|(c, _, _)| m.count_ones() < c) {
                    best = Some((m.count_ones(), e, m));
                }
            }
        }
        let Some((_, e, mask)) = best else {
            return Ok(true);
        };
        for c in 0..COLOURS as u8 {
            if mask & (1 << c) == 0 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            self.colour[e] = Some(c);
            if self.run()? {
                return Ok(true);
            }
        }
        self.colour[e] = None;
        Ok(false)
    }
}

/// The icosahedron's rotation system in its (unique) planar embedding.
pub fn icosahedron_rotation() -> RotationSystem {
    RotationSystem {
        order: crate::families::ICOSAHEDRON_ROTATION
            .iter()
            .map(|r| r.to_vec())
            .collect(),
    }
}

/// The circulant on 12 vertices with offsets 1, 2, 6, rotated by offset
/// `+1, +2, +6, -2, -1`.
pub fn circulant_12() -> (Graph, RotationSystem) {
    let n = 12;
    let offsets = [1, 2, 6, n - 2, n - 1];
    let edges = (0..n).flat_map(|v| offsets.iter().map(move |&o| (v, (v + o) % n)));
    let g = Graph::from_edges_merged(n, edges.filter(|&(a, b)| a < b));
    let order = (0..n).map(|v| offsets.iter().map(|&o| (v + o) % n).collect()).collect();
    (g, RotationSystem { order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c8pp, icosahedron};

    #[test]
    fn c8pp_sees_two_orders() {
        let g = c8pp();
        let c = induced_colouring(&g, 2, &c8pp_embedding()).unwrap();
        assert!(c.is_proper(&g));
        assert_eq!(cycles_of_length(&g, 5).len(), 4);
        let orders = cyclic_colour_orders(&g, &c, 5).unwrap();
        assert_eq!(orders.len(), 2);
        assert!(orders.iter().all(|o| o.iter().collect::<BTreeSet<_>>().len() == 5));
    }

    #[test]
    fn cayley_is_proper() {
        for k in 1..=3 {
            let (g, c) = cayley_edge_labels(k).unwrap();
            assert!(c.is_proper(&g));
            assert_eq!(c.count, 2 * k + 1);
        }
    }

    #[test]
    fn induced_rejects_non_embeddings() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let c = induced_colouring(&g, 2, &Homomorphism { map: vec![0, 1] }).unwrap();
        assert_eq!(c.colour, vec![0]);
        assert_eq!(
            induced_colouring(&g, 2, &Homomorphism { map: vec![0, 3] }),
            Err(Error::NotEmbedding)
        );
        assert_eq!(
            induced_colouring(&g, 2, &Homomorphism { map: vec![1, 1] }),
            Err(Error::NotEmbedding)
        );
    }

    #[test]
    fn icosahedron_colourings() {
        let g = icosahedron();
        let rot = icosahedron_rotation();
        assert!(rot.is_valid_for(&g));
        let plain = super_proper_search(&g, &rot, &[], 1_000_000).unwrap().unwrap();
        assert!(plain.is_proper(&g));
        assert_eq!(
            super_proper_search(&g, &rot, &[(1, 2), (3, 4)], 100_000_000).unwrap(),
            None
        );
    }

    #[test]
    fn rotation_round_trip() {
        let rot = icosahedron_rotation();
        assert_eq!(RotationSystem::parse(&rot.write()).unwrap(), rot);
        let (g, r) = circulant_12();
        assert!(r.is_valid_for(&g));
        assert_eq!(g.degree_sequence(), vec![5; 12]);
    }
}
