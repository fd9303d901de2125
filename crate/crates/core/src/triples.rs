//! k-good triples: classification, enumeration and realization on an edge.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{LevelSets, Vertex};

/// A sorted triple `p <= q <= r` of distances in `[1, k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoodTriple {
    pub p: u32,
    pub q: u32,
    pub r: u32,
}

impl GoodTriple {
    pub fn sorted(a: u32, b: u32, c: u32) -> Self {
        let mut t = [a, b, c];
        t.sort_unstable();
        GoodTriple {
            p: t[0],
            q: t[1],
            r: t[2],
        }
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.p, self.q, self.r]
    }

    pub fn contains(&self, w: u32) -> bool {
        self.as_array().contains(&w)
    }

    /// The two entries left after removing one copy of `w`.
    pub fn others(&self, w: u32) -> Option<(u32, u32)> {
        match self.as_array() {
            [a, b, c] if a == w => Some((b, c)),
            [a, b, c] if b == w => Some((a, c)),
            [a, b, c] if c == w => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for GoodTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.p, self.q, self.r)
    }
}

/// Arithmetic k-good test: odd sums must reach `2k + 1`, even sums must
/// satisfy the triangle inequalities.
pub fn is_k_good(p: u32, q: u32, r: u32, k: u32) -> Result<bool> {
    if [p, q, r].iter().any(|&x| x < 1 || x > k) {
        return Err(Error::Domain(format!("triple ({p},{q},{r}) not in [1,{k}]")));
    }
    let sum = p + q + r;
    let max = p.max(q).max(r);
    Ok(if sum % 2 == 1 { sum > 2 * k } else { 2 * max <= sum })
}

/// All k-good triples, sorted lexicographically.
pub fn enumerate_k_good(k: u32) -> Vec<GoodTriple> {
    let mut out = Vec::new();
    for p in 1..=k {
        for q in p..=k {
            for r in q..=k {
                if is_k_good(p, q, r, k).unwrap_or(false) {
                    out.push(GoodTriple { p, q, r });
                }
            }
        }
    }
    out
}

/// For every weight `w` in `1..=k`, the k-good triples containing `w`
/// together with the remaining pair `(q, r)`, `q <= r`, in triple order.
#[derive(Clone, Debug)]
pub struct TripleTable {
    k: u32,
    by_weight: Vec<Vec<(GoodTriple, u32, u32)>>,
}

impl TripleTable {
    pub fn new(k: u32) -> Self {
        let all = enumerate_k_good(k);
        let by_weight = (0..=k)
            .map(|w| {
                all.iter()
                    .filter_map(|t| t.others(w).map(|(q, r)| (*t, q, r)))
                    .collect()
            })
            .collect();
        TripleTable { k, by_weight }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn for_weight(&self, w: u32) -> &[(GoodTriple, u32, u32)] {
        self.by_weight.get(w as usize).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Whether the triple `{d(x,y), q, r}` is realized on `xy`: some `z1` with
/// `(d(x,z1), d(y,z1)) = (q, r)` and some `z2` with `(r, q)`. With `q = r`
/// one common vertex serves both roles.
///
/// `levels` decides which vertices count as witnesses: full distance levels
/// allow any vertex, the pruned view of a partial distance graph only
/// allows vertices joined to both ends by surviving weighted edges.
pub fn realized_on_edge<L: LevelSets + ?Sized>(levels: &L, x: Vertex, y: Vertex, q: u32, r: u32) -> bool {
    let meet = |a: u32, b: u32| match (levels.level(x, a), levels.level(y, b)) {
        (Some(sx), Some(sy)) => !sx.is_disjoint(sy),
        _ => false,
    };
    meet(q, r) && (q == r || meet(r, q))
}
