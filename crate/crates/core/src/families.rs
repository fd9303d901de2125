//! Deterministic generators for every graph family used by the crate.
//!
//! Vertex numbering is part of the contract (certificates and golden files
//! depend on it):
//!
//! * cubes: the vertex id is the bit-vector itself;
//! * Kneser graphs: k-subsets in colex order (increasing bitmask value);
//! * toroidal grids: row-major, `(i, j) -> i * cols + j`;
//! * Mycielski levels: `u^i_j -> (i - 1)(2k + 1) + j`, apex last;
//! * named graphs: the label order documented on each constructor.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default upper limit on generated vertex counts.
pub const DEFAULT_VERTEX_CAP: usize = 1 << 20;

fn check_cap(n: u128, what: &str) -> Result<usize> {
    if n > DEFAULT_VERTEX_CAP as u128 {
        return Err(Error::Domain(format!(
            "{what} would have {n} vertices, above the cap of {DEFAULT_VERTEX_CAP}"
        )));
    }
    Ok(n as usize)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Domain("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn hypercube(d: u32) -> Result<Graph> {
    let n = check_cap(1u128 << d.min(100), "hypercube")?;
    Graph::from_edges(
        n,
        (0..n).flat_map(|x| (0..d).map(move |i| (x, x ^ (1 << i))).filter(|&(x, y)| x < y)),
    )
}

/// PC(2k): the Cayley graph on 2k-bit vectors with generators the unit
/// vectors and the all-ones vector.
pub fn projective_cube(k: u32) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Domain("projective cube needs k >= 1".into()));
    }
    let n = check_cap(1u128 << (2 * k).min(100), "projective cube")?;
    let ones = n - 1;
    let gens: Vec<usize> = (0..2 * k).map(|i| 1usize << i).chain([ones]).collect();
    Graph::from_edges(
        n,
        (0..n).flat_map(|x| gens.iter().map(move |&s| (x, x ^ s)).filter(|&(x, y)| x < y)),
    )
}

/// Distance in PC(2k) between bit-vectors `x` and `y`.
pub fn pc_distance(x: u64, y: u64, k: u32) -> u32 {
    let w = (x ^ y).count_ones();
    w.min(2 * k + 1 - w)
}

/// All `k`-subsets of `0..n` as bitmasks, in colex order.
pub fn colex_subsets(n: u32, k: u32) -> Vec<u64> {
    assert!(n < 64);
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        return vec![0];
    }
    // Gosper's hack enumerates same-popcount masks in increasing order.
    let mut x: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while x < limit {
        out.push(x);
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    out
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The Kneser graph K(n, k): k-subsets, adjacent when disjoint.
pub fn kneser(n: u32, k: u32) -> Result<Graph> {
    if k < 1 || n < 2 * k || n >= 64 {
        return Err(Error::Domain(format!("kneser needs n >= 2k >= 2, got ({n}, {k})")));
    }
    check_cap(binomial(n, k), "kneser graph")?;
    let subsets = colex_subsets(n, k);
    let mut edges = Vec::new();
    for (i, &a) in subsets.iter().enumerate() {
        for (j, &b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(subsets.len(), edges)
}

/// C_{p,q}: `i ~ j` iff `q <= (i - j) mod p <= p - q`.
pub fn circular_clique(p: usize, q: usize) -> Result<Graph> {
    if q < 1 || p <= 2 * q {
        return Err(Error::Domain(format!(
            "circular clique needs p > 2q >= 2, got ({p}, {q})"
        )));
    }
    let edges = (0..p).flat_map(|i| {
        (i + 1..p).filter_map(move |j| {
            let diff = j - i;
            (q <= diff && diff <= p - q).then_some((i, j))
        })
    });
    Graph::from_edges(p, edges)
}

/// The toroidal grid C_a x C_b, row-major.
pub fn toroidal_grid(a: usize, b: usize) -> Result<Graph> {
    if a < 3 || b < 3 {
        return Err(Error::Domain("toroidal grid needs both sides >= 3".into()));
    }
    let id = |i: usize, j: usize| i * b + j;
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((id(i, j), id(i, (j + 1) % b)));
            edges.push((id(i, j), id((i + 1) % a, j)));
        }
    }
    Graph::from_edges(a * b, edges)
}

/// Row-major id of `(i, j)` in AT(2k, 2k).
pub fn at_vertex(i: usize, j: usize, k: usize) -> Vertex {
    i * 2 * k + j
}

pub fn at_coords(v: Vertex, k: usize) -> (usize, usize) {
    (v / (2 * k), v % (2 * k))
}

pub fn at_antipode((i, j): (usize, usize), k: usize) -> (usize, usize) {
    ((i + k) % (2 * k), (j + k) % (2 * k))
}

/// Sum of cyclic coordinate distances in the 2k x 2k torus.
pub fn toroidal_distance(u: (usize, usize), v: (usize, usize), k: usize) -> usize {
    let cyc = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d.min(2 * k - d)
    };
    cyc(u.0, v.0) + cyc(u.1, v.1)
}

/// Distance in AT(2k, 2k): `min(d_T, 2k + 1 - d_T)`.
pub fn at_distance(u: (usize, usize), v: (usize, usize), k: usize) -> usize {
    let dt = toroidal_distance(u, v, k);
    dt.min(2 * k + 1 - dt)
}

/// AT(2k, 2k): the 2k x 2k toroidal grid plus antipodal edges. Edges that
/// coincide for k = 1 are merged.
pub fn augmented_toroidal(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::Domain("augmented toroidal grid needs k >= 1".into()));
    }
    let s = 2 * k;
    let mut edges = Vec::new();
    for i1 in 0..s {
        for j1 in 0..s {
            for i2 in 0..s {
                for j2 in 0..s {
                    let (a, b) = (at_vertex(i1, j1, k), at_vertex(i2, j2, k));
                    if a >= b {
                        continue;
                    }
                    let di = i1.abs_diff(i2);
                    let dj = j1.abs_diff(j2);
                    let vertical = i1 == i2 && (dj == 1 || dj == s - 1);
                    let horizontal = j1 == j2 && (di == 1 || di == s - 1);
                    let antipodal = di == k && dj == k;
                    if vertical || horizontal || antipodal {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    Ok(Graph::from_edges_merged(s * s, edges))
}

/// Id of `u^level_j` in the level-k Mycielski graph (levels are 1-based).
pub fn mycielski_vertex(level: usize, j: usize, k: usize) -> Vertex {
    (level - 1) * (2 * k + 1) + j
}

/// The generalized level-k Mycielski graph of C_{2k+1}; order 2k^2 + k + 1.
pub fn mycielski_level(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::Domain("mycielski level needs k >= 1".into()));
    }
    let c = 2 * k + 1;
    let apex = k * c;
    let mut edges = Vec::new();
    for j in 0..c {
        edges.push((mycielski_vertex(1, j, k), mycielski_vertex(1, (j + 1) % c, k)));
    }
    for level in 2..=k {
        for j in 0..c {
            let x = mycielski_vertex(level, j, k);
            edges.push((x, mycielski_vertex(level - 1, (j + c - 1) % c, k)));
            edges.push((x, mycielski_vertex(level - 1, (j + 1) % c, k)));
        }
    }
    for j in 0..c {
        edges.push((apex, mycielski_vertex(k, j, k)));
    }
    Ok(Graph::from_edges_merged(apex + 1, edges))
}

/// T_{2k+1}(p, q, r) with its three hubs.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    pub k: u32,
    pub lengths: [u32; 3],
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
    /// The six hub-to-hub paths in construction order: `uv` short, `uv`
    /// long, `uw` short, `uw` long, `vw` short, `vw` long. Each path lists
    /// all its vertices from the first hub to the second.
    pub paths: Vec<Vec<Vertex>>,
}

/// Hubs `u = 0`, `v = 1`, `w = 2`; path interiors follow in the order of
/// [`Gadget::paths`].
pub fn gadget(k: u32, p: u32, q: u32, r: u32) -> Result<Gadget> {
    if [p, q, r].iter().any(|&x| x < 1 || x > k) {
        return Err(Error::Domain(format!("gadget lengths must lie in [1, {k}]")));
    }
    let (u, v, w) = (0, 1, 2);
    let mut next = 3;
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for (a, b, len) in [(u, v, p), (u, w, q), (v, w, r)] {
        for l in [len, 2 * k + 1 - len] {
            let mut path = vec![a];
            for _ in 1..l {
                path.push(next);
                next += 1;
            }
            path.push(b);
            edges.extend(path.windows(2).map(|e| (e[0], e[1])));
            paths.push(path);
        }
    }
    Ok(Gadget {
        graph: Graph::from_edges(next, edges)?,
        k,
        lengths: [p, q, r],
        u,
        v,
        w,
        paths,
    })
}

/// C8 with two disjoint antipodal chords. Ids 0..7 are v1..v8 in cyclic
/// order; the chords are v1v5 and v3v7.
pub fn c8pp() -> Graph {
    let mut e: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.extend([(0, 4), (2, 6)]);
    Graph::from_edges_merged(8, e)
}

/// Ids 0..9 are the 10-cycle v0..v9, ids 10..14 are x0..x4. Labels follow
/// the drawing in which x0 ~ v0,v5; x1 ~ v2,v7; x2 ~ v4,v9; x3 ~ v1,v6 and
/// x4 ~ v3,v8, i.e. `x_j ~ v_{2j mod 5}, v_{2j mod 5 + 5}`.
pub fn x15() -> Graph {
    let mut e: Vec<_> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    for j in 0..5 {
        let a = (2 * j) % 5;
        e.push((10 + j, a));
        e.push((10 + j, a + 5));
    }
    Graph::from_edges_merged(15, e)
}

/// Vertex index of `x_j` in [`x15`].
pub const X15_FIRST_X: Vertex = 10;

/// Labels a1, a2, b1..b6, c1..c6, d1, d2 map to ids 0..15.
pub fn x16() -> Graph {
    const A1: usize = 0;
    const A2: usize = 1;
    let b = |i: usize| 1 + i;
    let c = |i: usize| 7 + i;
    const D1: usize = 14;
    const D2: usize = 15;
    let e = vec![
        (b(5), A1),
        (A1, b(1)),
        (b(1), b(2)),
        (b(2), A2),
        (A2, b(6)),
        (A1, b(3)),
        (b(3), b(4)),
        (b(4), A2),
        (b(2), c(1)),
        (c(1), D1),
        (D1, c(5)),
        (c(5), b(6)),
        (D1, c(3)),
        (c(3), b(3)),
        (b(4), c(4)),
        (c(4), c(3)),
        (b(1), c(2)),
        (c(2), c(1)),
        (c(2), D2),
        (D2, c(4)),
        (c(5), b(5)),
        (b(5), c(6)),
        (D2, c(6)),
        (c(6), b(6)),
    ];
    Graph::from_edges_merged(16, e)
}

/// C8 plus its four long diagonals.
pub fn wagner() -> Graph {
    let mut e: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    e.extend((0..4).map(|i| (i, i + 4)));
    Graph::from_edges_merged(8, e)
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes `i ~ i + 5`.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((5 + i, 5 + (i + 2) % 5));
        e.push((i, i + 5));
    }
    Graph::from_edges_merged(10, e)
}

/// Mycielskian of C5: cycle 0..4, shadows 5..9 (`w_i ~ u_{i±1}`), apex 10.
pub fn grotzsch() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((5 + i, (i + 4) % 5));
        e.push((5 + i, (i + 1) % 5));
        e.push((10, 5 + i));
    }
    Graph::from_edges_merged(11, e)
}

/// Coxeter graph: `a_i ~ a_{i+1}`, `b_i ~ b_{i+2}`, `c_i ~ c_{i+3}` and
/// `d_i ~ a_i, b_i, c_i` over Z_7; ids a = 0..6, b = 7..13, c = 14..20,
/// d = 21..27.
pub fn coxeter() -> Graph {
    let mut e = Vec::new();
    for i in 0..7 {
        e.push((i, (i + 1) % 7));
        e.push((7 + i, 7 + (i + 2) % 7));
        e.push((14 + i, 14 + (i + 3) % 7));
        e.extend([(21 + i, i), (21 + i, 7 + i), (21 + i, 14 + i)]);
    }
    Graph::from_edges_merged(28, e)
}

/// The folded 5-cube: 5-bit vectors modulo complement, representatives with
/// the top bit clear.
pub fn clebsch() -> Graph {
    let rep = |x: usize| if x & 16 != 0 { x ^ 31 } else { x };
    let e = (0..16).flat_map(|x| (0..5).map(move |i| (x, rep(x ^ (1 << i)))));
    Graph::from_edges_merged(16, e.filter(|&(a, b)| a < b).collect::<Vec<_>>())
}

/// Icosahedron labels, in id order.
pub const ICOSAHEDRON_LABELS: [&str; 12] = ["x", "y", "z", "a", "b", "c", "d", "e", "f", "g", "h", "i"];

/// Clockwise neighbour order of every icosahedron vertex in its planar
/// drawing (outer triangle x, y, z).
pub const ICOSAHEDRON_ROTATION: [[Vertex; 5]; 12] = [
    [2, 8, 3, 4, 1],
    [0, 4, 5, 6, 2],
    [1, 6, 7, 8, 0],
    [0, 8, 11, 9, 4],
    [0, 3, 9, 5, 1],
    [4, 9, 10, 6, 1],
    [5, 10, 7, 2, 1],
    [10, 11, 8, 2, 6],
    [3, 0, 2, 7, 11],
    [4, 3, 11, 10, 5],
    [9, 11, 7, 6, 5],
    [9, 3, 8, 7, 10],
];

pub fn icosahedron() -> Graph {
    let e = ICOSAHEDRON_ROTATION
        .iter()
        .enumerate()
        .flat_map(|(v, ns)| ns.iter().map(move |&u| (v, u)))
        .filter(|&(a, b)| a < b)
        .collect::<Vec<_>>();
    Graph::from_edges_merged(12, e)
}

/// A family name plus its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Hypercube(u32),
    ProjectiveCube(u32),
    Kneser(u32, u32),
    CircularClique(usize, usize),
    ToroidalGrid(usize, usize),
    AugmentedToroidal(usize),
    MycielskiLevel(usize),
    Gadget(u32, u32, u32, u32),
    C8pp,
    X15,
    X16,
    Wagner,
    Petersen,
    Grotzsch,
    Coxeter,
    Clebsch,
    Icosahedron,
}

impl FamilySpec {
    /// Parses a family name and its parameters as given on the command line.
    pub fn parse(name: &str, params: &[u64]) -> Result<Self> {
        let want = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::Domain(format!(
                    "{name} takes {n} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let us = |i: usize| params[i] as usize;
        let u32p = |i: usize| -> Result<u32> {
            u32::try_from(params[i]).map_err(|_| Error::Domain("parameter too large".into()))
        };
        use FamilySpec::*;
        Ok(match name {
            "cycle" => {
                want(1)?;
                Cycle(us(0))
            }
            "path" => {
                want(1)?;
                Path(us(0))
            }
            "complete" => {
                want(1)?;
                Complete(us(0))
            }
            "hypercube" => {
                want(1)?;
                Hypercube(u32p(0)?)
            }
            "projective_cube" | "pc" => {
                want(1)?;
                ProjectiveCube(u32p(0)?)
            }
            "kneser" => {
                want(2)?;
                Kneser(u32p(0)?, u32p(1)?)
            }
            "circular_clique" => {
                want(2)?;
                CircularClique(us(0), us(1))
            }
            "toroidal_grid" => {
                want(2)?;
                ToroidalGrid(us(0), us(1))
            }
            "augmented_toroidal" | "at" => {
                want(1)?;
                AugmentedToroidal(us(0))
            }
            "mycielski_level" | "mycielski" => {
                want(1)?;
                MycielskiLevel(us(0))
            }
            "gadget" => {
                want(4)?;
                Gadget(u32p(0)?, u32p(1)?, u32p(2)?, u32p(3)?)
            }
            _ => {
                want(0)?;
                match name {
                    "c8pp" => C8pp,
                    "x15" => X15,
                    "x16" => X16,
                    "wagner" => Wagner,
                    "petersen" => Petersen,
                    "grotzsch" => Grotzsch,
                    "coxeter" => Coxeter,
                    "clebsch" => Clebsch,
                    "icosahedron" => Icosahedron,
                    _ => return Err(Error::Domain(format!("unknown family `{name}`"))),
                }
            }
        })
    }

    pub fn build(&self) -> Result<Graph> {
        use FamilySpec::*;
        match *self {
            Cycle(n) => cycle(n),
            Path(n) => path(n),
            Complete(n) => complete(n),
            Hypercube(d) => hypercube(d),
            ProjectiveCube(k) => projective_cube(k),
            Kneser(n, k) => kneser(n, k),
            CircularClique(p, q) => circular_clique(p, q),
            ToroidalGrid(a, b) => toroidal_grid(a, b),
            AugmentedToroidal(k) => augmented_toroidal(k),
            MycielskiLevel(k) => mycielski_level(k),
            Gadget(k, p, q, r) => gadget(k, p, q, r).map(|g| g.graph),
            C8pp => Ok(c8pp()),
            X15 => Ok(x15()),
            X16 => Ok(x16()),
            Wagner => Ok(wagner()),
            Petersen => Ok(petersen()),
            Grotzsch => Ok(grotzsch()),
            Coxeter => Ok(coxeter()),
            Clebsch => Ok(clebsch()),
            Icosahedron => Ok(icosahedron()),
        }
    }
}
