use fixedbitset::FixedBitSet;

use super::{Graph, Vertex};
use crate::par::{self, ScanMode};

/// Marker for "no path" in a [`DistanceMatrix`].
pub const INFINITE: u32 = u32::MAX;

/// All-pairs shortest-path distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw distance; [`INFINITE`] across components.
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn finite(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let d = self.get(u, v);
        (d != INFINITE).then_some(d)
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance, 0 for graphs without edges.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().filter(|&d| d != INFINITE).max().unwrap_or(0)
    }
}

/// Single-source BFS. Unreached vertices get [`INFINITE`].
pub fn bfs_distances(g: &Graph, s: Vertex) -> Vec<u32> {
    let mut dist = vec![INFINITE; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    dist[s] = 0;
    queue.push(s);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let dx = dist[x] + 1;
        for &y in g.neighbors(x) {
            if dist[y] == INFINITE {
                dist[y] = dx;
                queue.push(y);
            }
        }
    }
    dist
}

pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    all_pairs_distances_with(g, ScanMode::default())
}

/// BFS from every vertex; rows are computed independently.
pub fn all_pairs_distances_with(g: &Graph, mode: ScanMode) -> DistanceMatrix {
    let rows = par::map_range(mode, g.n(), |s| bfs_distances(g, s));
    DistanceMatrix {
        n: g.n(),
        d: rows.concat(),
    }
}

/// Anything that can hand out "vertices at distance `d` from `v`" as a
/// bit-set. Realization checks only need this view.
pub trait LevelSets {
    fn level(&self, v: Vertex, d: u32) -> Option<&FixedBitSet>;
}

/// `levels[v][d]` is the set of vertices at distance exactly `d` from `v`,
/// for `0 <= d <= ecc(v)`.
#[derive(Clone, Debug)]
pub struct DistanceLevels {
    levels: Vec<Vec<FixedBitSet>>,
}

impl DistanceLevels {
    pub fn from_matrix(dm: &DistanceMatrix) -> Self {
        let n = dm.n();
        let levels = (0..n)
            .map(|v| {
                let row = dm.row(v);
                let ecc = row.iter().copied().filter(|&d| d != INFINITE).max().unwrap_or(0);
                let mut lv = vec![FixedBitSet::with_capacity(n); ecc as usize + 1];
                for (u, &d) in row.iter().enumerate() {
                    if d != INFINITE {
                        lv[d as usize].insert(u);
                    }
                }
                lv
            })
            .collect();
        DistanceLevels { levels }
    }

    pub fn eccentricity(&self, v: Vertex) -> u32 {
        (self.levels[v].len() - 1) as u32
    }

    /// The vertices at distance `d` from `v`, as a sorted list.
    pub fn vertices_at(&self, v: Vertex, d: u32) -> Vec<Vertex> {
        self.level(v, d).map(|s| s.ones().collect()).unwrap_or_default()
    }
}

impl LevelSets for DistanceLevels {
    fn level(&self, v: Vertex, d: u32) -> Option<&FixedBitSet> {
        self.levels[v].get(d as usize)
    }
}

pub fn distance_levels(g: &Graph) -> DistanceLevels {
    DistanceLevels::from_matrix(&all_pairs_distances(g))
}
