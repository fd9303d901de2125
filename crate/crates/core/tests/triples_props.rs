//! The arithmetic triple predicate against its gadget definition, plus
//! realization symmetry.

use girthbound::families::gadget;
use girthbound::graph::{distance_levels, odd_girth, Graph};
use girthbound::triples::{enumerate_k_good, is_k_good, realized_on_edge, TripleTable};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Brute-force gadget counts, frozen.
const GOOD_COUNTS: [usize; 12] = [1, 3, 7, 13, 21, 32, 46, 63, 84, 109, 138, 172];

#[test]
fn predicate_matches_gadget_odd_girth() {
    for k in 1..=5u32 {
        for p in 1..=k {
            for q in 1..=k {
                for r in 1..=k {
                    let og = odd_girth(&gadget(k, p, q, r).unwrap().graph);
                    let oracle = og.is_none_or(|l| l > 2 * k);
                    assert_eq!(is_k_good(p, q, r, k).unwrap(), oracle, "k={k} ({p},{q},{r})");
                }
            }
        }
    }
}

#[test]
fn top_weight_specialization() {
    for k in 1..=20u32 {
        for p in 1..=k {
            for q in 1..=k {
                assert_eq!(is_k_good(p, q, k, k).unwrap(), p + q >= k, "k={k} p={p} q={q}");
            }
        }
    }
}

#[test]
fn counts_are_frozen_and_monotone() {
    let counts: Vec<_> = (1..=12).map(|k| enumerate_k_good(k).len()).collect();
    assert_eq!(counts, GOOD_COUNTS);
    assert!(counts.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn enumeration_is_sorted_and_canonical() {
    for k in 1..=12 {
        let list = enumerate_k_good(k);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
        for t in &list {
            let [p, q, r] = t.as_array();
            assert!(p <= q && q <= r && r <= k);
            assert!(is_k_good(r, p, q, k).unwrap() && is_k_good(q, r, p, k).unwrap());
        }
    }
}

#[test]
fn table_lists_triples_by_weight() {
    for k in 1..=8 {
        let table = TripleTable::new(k);
        for w in 1..=k {
            for t in enumerate_k_good(k) {
                let entry = table.for_weight(w).iter().find(|e| e.0 == t);
                assert_eq!(entry.is_some(), t.as_array().contains(&w), "k={k} w={w} {t:?}");
                if let Some(&(_, q, r)) = entry {
                    let mut a = [w, q, r];
                    a.sort_unstable();
                    assert!(q <= r && a == t.as_array());
                }
            }
        }
    }
}

#[test]
fn domain_errors() {
    assert!(is_k_good(0, 1, 1, 2).is_err());
    assert!(is_k_good(1, 1, 3, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn realization_is_symmetric(n in 2usize..16, p in 0.1f64..0.6, seed: u64, q in 1u32..5, r in 1u32..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let l = distance_levels(&g);
        let x = rng.gen_range(0..n);
        let y = rng.gen_range(0..n);
        prop_assert_eq!(realized_on_edge(&l, x, y, q, r), realized_on_edge(&l, y, x, r, q));
        prop_assert_eq!(realized_on_edge(&l, x, y, q, r), realized_on_edge(&l, x, y, r, q));
    }
}
