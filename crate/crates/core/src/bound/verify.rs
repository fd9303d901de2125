use super::{PartialDistanceGraph, WeightedEdge};
use crate::graph::{all_pairs_distances, odd_girth, Graph};
use crate::triples::{realized_on_edge, GoodTriple, TripleTable};

/// Outcome of the all-k-good-triple check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyCheck {
    Ok,
    /// No weighted edges at all.
    Empty,
    /// First failing edge (lexicographic) and its first failing triple.
    Fail {
        edge: WeightedEdge,
        triple: GoodTriple,
    },
}

impl PropertyCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, PropertyCheck::Ok)
    }
}

/// Checks that every weighted edge realizes every k-good triple containing
/// its weight, with witnesses joined to both ends by weighted edges of
/// `pdg`. Assumes `pdg` is a k-partial distance graph of `b`.
pub fn all_k_good_property(b: &Graph, pdg: &PartialDistanceGraph, k: u32) -> PropertyCheck {
    debug_assert_eq!(b.n(), pdg.base.n());
    if pdg.edges.is_empty() {
        return PropertyCheck::Empty;
    }
    let table = TripleTable::new(k);
    let levels = pdg.pruned_levels_for(b.n(), k);
    for e in &pdg.edges {
        for &(t, q, r) in table.for_weight(e.weight) {
            if !realized_on_edge(&levels, e.u, e.v, q, r) {
                return PropertyCheck::Fail { edge: *e, triple: t };
            }
        }
    }
    PropertyCheck::Ok
}

/// Independent certificate check: odd-girth exactly `2k + 1`, every weight
/// equals the BFS distance in `b` and lies in `1..=k`, pairs are sorted
/// and distinct, and the all-k-good-triple property holds.
pub fn verify_certificate(b: &Graph, pdg: &PartialDistanceGraph, k: u32) -> bool {
    if k == 0 || pdg.k != k || odd_girth(b) != Some(2 * k + 1) {
        return false;
    }
    let dist = all_pairs_distances(b);
    let n = b.n();
    let well_formed = pdg
        .edges
        .iter()
        .all(|e| e.u < e.v && e.v < n && e.weight >= 1 && e.weight <= k && dist.get(e.u, e.v) == e.weight);
    let sorted = pdg.edges.windows(2).all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v));
    well_formed && sorted && all_k_good_property(b, pdg, k).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c8pp, cycle, projective_cube};
    use crate::graph::all_pairs_distances;

    fn complete_pdg(b: &Graph, k: u32) -> PartialDistanceGraph {
        PartialDistanceGraph::complete(b, &all_pairs_distances(b), k)
    }

    #[test]
    fn c5_fails_on_a_weight_two_edge() {
        let b = cycle(5).unwrap();
        match all_k_good_property(&b, &complete_pdg(&b, 2), 2) {
            PropertyCheck::Fail { edge, triple } => {
                assert_eq!(edge.weight, 2);
                assert_eq!(triple, GoodTriple::sorted(2, 2, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn c8pp_certificate_and_corruption() {
        let b = c8pp();
        // v2v6 and v4v8 (ids 1,5 and 3,7) sit at distance 3, so the
        // distance-2 closure already omits exactly those two pairs.
        let pdg = complete_pdg(&b, 2);
        assert_eq!(pdg.edges.len(), 26);
        assert!(!pdg.contains(1, 5) && !pdg.contains(3, 7));
        assert_eq!(all_k_good_property(&b, &pdg, 2), PropertyCheck::Ok);
        assert!(verify_certificate(&b, &pdg, 2));
        let mut bad = pdg.clone();
        let i = bad.edges.iter().position(|e| e.weight == 2).unwrap();
        bad.edges[i].weight = 1;
        assert!(!verify_certificate(&b, &bad, 2));
    }

    #[test]
    fn projective_cube_complete_graph() {
        let b = projective_cube(2).unwrap();
        assert!(verify_certificate(&b, &complete_pdg(&b, 2), 2));
    }

    #[test]
    fn empty_is_not_ok() {
        let b = cycle(5).unwrap();
        let mut pdg = complete_pdg(&b, 2);
        pdg.edges.clear();
        assert_eq!(all_k_good_property(&b, &pdg, 2), PropertyCheck::Empty);
    }
}
