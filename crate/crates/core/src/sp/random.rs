use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{odd_girth, shortest_odd_cycle, Graph, Vertex};

/// Replaces edge `(a, b)` by a path of length 3 through two new vertices.
fn subdivide_twice(n: &mut usize, edges: &mut Vec<(Vertex, Vertex)>, i: usize) {
    let (a, b) = edges.swap_remove(i);
    let (x, y) = (*n, *n + 1);
    *n += 2;
    edges.extend([(a, x), (x, y), (y, b)]);
}

/// A seeded connected K4-minor-free graph with odd-girth at least `2k + 1`
/// and at least `target_n` vertices.
///
/// A random 2-tree on about `target_n / 2` vertices is thinned (each new
/// vertex keeps one of its two edges for sure and the other with
/// probability 1/2), then edges of shortest odd cycles are subdivided twice
/// until the odd-girth is large enough, then random edges are subdivided
/// until the order is reached. Double subdivision preserves parity and
/// K4-minor-freeness.
pub fn random_sp_instance(k: u32, target_n: usize, seed: u64) -> Result<Graph> {
    if k == 0 || target_n < 2 * k as usize + 1 {
        return Err(Error::Domain(format!(
            "need k >= 1 and target_n >= 2k+1, got k = {k}, n = {target_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = (target_n / 2).max(2);
    let mut tree = vec![(0, 1)];
    let mut edges = vec![(0, 1)];
    for v in 2..core {
        let (a, b) = tree[rng.gen_range(0..tree.len())];
        let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        tree.extend([(a, v), (b, v)]);
        edges.push((a, v));
        if rng.gen_bool(0.5) {
            edges.push((b, v));
        }
    }
    let mut n = core;
    let build = |n: usize, edges: &[(Vertex, Vertex)]| Graph::from_edges_merged(n, edges.iter().copied());
    loop {
        let g = build(n, &edges);
        match odd_girth(&g) {
            Some(len) if len < 2 * k + 1 => {
                let cyc = shortest_odd_cycle(&g).expect("odd-girth is finite");
                let j = rng.gen_range(0..cyc.len());
                let (a, b) = (cyc[j], cyc[(j + 1) % cyc.len()]);
                let i = edges
                    .iter()
                    .position(|&e| e == (a, b) || e == (b, a))
                    .expect("cycle edge is a graph edge");
                subdivide_twice(&mut n, &mut edges, i);
            }
            _ => break,
        }
    }
    while n < target_n {
        let i = rng.gen_range(0..edges.len());
        subdivide_twice(&mut n, &mut edges, i);
    }
    Ok(build(n, &edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sp::is_k4_minor_free;

    #[test]
    fn postconditions() {
        for k in 1..=4 {
            for seed in 0..40 {
                let g = random_sp_instance(k, 6 * k as usize, seed).unwrap();
                assert!(g.n() >= 6 * k as usize);
                assert!(g.is_connected());
                assert!(is_k4_minor_free(&g));
                assert!(odd_girth(&g).is_none_or(|l| l > 2 * k));
            }
        }
        let g = random_sp_instance(2, 30, 7).unwrap();
        assert!(is_k4_minor_free(&g) && odd_girth(&g).is_none_or(|l| l >= 5));
        assert!(random_sp_instance(3, 5, 0).is_err());
    }

    #[test]
    fn seeded() {
        assert_eq!(
            random_sp_instance(3, 40, 11).unwrap(),
            random_sp_instance(3, 40, 11).unwrap()
        );
    }
}
