//! Known values: hand-checkable facts and published results, one test per
//! module area.

use girthbound::bound::{
    all_k_good_property, check_bound, minimality_lint, no_certificate, verify_certificate, Answer,
    PartialDistanceGraph, PropertyCheck, WeightedEdge,
};
use girthbound::colour::{
    c8pp_embedding, cayley_edge_labels, circulant_12, cyclic_colour_orders, icosahedron_rotation, induced_colouring,
    super_proper_search,
};
use girthbound::families::{
    augmented_toroidal, c8pp, circular_clique, complete, coxeter, cycle, gadget, grotzsch, kneser, mycielski_level,
    path, pc_distance, petersen, projective_cube, wagner, x15, X15_FIRST_X,
};
use girthbound::graph::{
    all_pairs_distances, cycles_of_length, distance_levels, exists_cycle_through_pair, iso_check, odd_girth, Graph,
    DEFAULT_CYCLE_BUDGET, DEFAULT_ISO_BUDGET,
};
use girthbound::sp::{
    hom_search, hom_via_certificate, is_hom, is_k4_minor_free, random_sp_instance, two_tree_completion, Homomorphism,
    DEFAULT_HOM_BUDGET,
};
use girthbound::triples::{enumerate_k_good, is_k_good, realized_on_edge};

fn iso(g: &Graph, h: &Graph) -> bool {
    iso_check(g, h, DEFAULT_ISO_BUDGET).unwrap()
}

fn complete_pdg(b: &Graph, k: u32) -> PartialDistanceGraph {
    let d = all_pairs_distances(b);
    let mut edges = Vec::new();
    for u in 0..b.n() {
        for v in u + 1..b.n() {
            let w = d.get(u, v);
            if w <= k {
                edges.push(WeightedEdge { u, v, weight: w });
            }
        }
    }
    PartialDistanceGraph {
        base: b.clone(),
        k,
        edges,
    }
}

#[test]
fn distances() {
    let e = Graph::from_edges(2, [(0, 1)]).unwrap();
    let d = all_pairs_distances(&e);
    assert_eq!((d.get(0, 1), d.get(0, 0)), (1, 0));
    let d = all_pairs_distances(&cycle(5).unwrap());
    assert_eq!((d.get(0, 2), d.get(0, 3)), (2, 2));
    let pc = projective_cube(2).unwrap();
    let d = all_pairs_distances(&pc);
    let mut pairs = 0;
    for x in 0..16 {
        for y in x + 1..16 {
            assert_eq!(d.get(x, y), pc_distance(x as u64, y as u64, 2));
            pairs += 1;
        }
    }
    assert_eq!(pairs, 120);
    assert_eq!(d.diameter(), 2);
}

#[test]
fn odd_girths() {
    assert_eq!(odd_girth(&cycle(5).unwrap()), Some(5));
    assert_eq!(odd_girth(&projective_cube(2).unwrap()), Some(5));
    assert_eq!(odd_girth(&cycle(6).unwrap()), None);
    assert_eq!(odd_girth(&projective_cube(3).unwrap()), Some(7));
    assert_eq!(odd_girth(&kneser(7, 3).unwrap()), Some(7));
}

#[test]
fn levels() {
    let l = distance_levels(&cycle(5).unwrap());
    assert_eq!(l.vertices_at(0, 2), vec![2, 3]);
    let l = distance_levels(&petersen());
    assert!((0..10).all(|v| l.vertices_at(v, 2).len() == 6));
    let l = distance_levels(&path(3).unwrap());
    assert_eq!(l.vertices_at(0, 2), vec![2]);
}

#[test]
fn cycles_through_pairs() {
    let c5 = cycle(5).unwrap();
    assert!(exists_cycle_through_pair(&c5, 0, 2, 5, DEFAULT_CYCLE_BUDGET).unwrap());
    assert!(!exists_cycle_through_pair(&c5, 0, 2, 4, DEFAULT_CYCLE_BUDGET).unwrap());
    let g = c8pp();
    let on_five: Vec<_> = cycles_of_length(&g, 5)
        .iter()
        .flat_map(|c| (0..5).map(move |i| (c[i].min(c[(i + 1) % 5]), c[i].max(c[(i + 1) % 5]))))
        .collect();
    for (u, v) in g.edges() {
        let want = on_five.contains(&(u, v));
        assert_eq!(
            exists_cycle_through_pair(&g, u, v, 5, DEFAULT_CYCLE_BUDGET).unwrap(),
            want,
            "edge {u}{v}"
        );
    }
}

#[test]
fn isomorphisms() {
    assert!(iso(&projective_cube(1).unwrap(), &complete(4).unwrap()));
    assert!(iso(&kneser(5, 2).unwrap(), &petersen()));
    assert!(!iso(&cycle(5).unwrap(), &cycle(6).unwrap()));
    assert!(iso(&circular_clique(5, 1).unwrap(), &complete(5).unwrap()));
    let w = circular_clique(8, 3).unwrap();
    assert!(iso(&w, &wagner()));
    assert_eq!(w.degree_sequence(), vec![3; 8]);
    assert!(iso(&augmented_toroidal(1).unwrap(), &complete(4).unwrap()));
    assert!(iso(&augmented_toroidal(2).unwrap(), &projective_cube(2).unwrap()));
    assert!(iso(&mycielski_level(2).unwrap(), &grotzsch()));
}

#[test]
fn family_shapes() {
    let pc = projective_cube(2).unwrap();
    assert_eq!((pc.n(), pc.degree_sequence()), (16, vec![5; 16]));
    assert_eq!(pc_distance(0b1011, 0b1011, 2), 0);
    let at = augmented_toroidal(3).unwrap();
    assert_eq!(odd_girth(&at), Some(7));
    assert_eq!(all_pairs_distances(&at).diameter(), 3);
    let m = mycielski_level(3).unwrap();
    assert_eq!((m.n(), odd_girth(&m)), (22, Some(7)));
    assert_eq!(grotzsch().n(), 11);
    let g = c8pp();
    assert_eq!((g.n(), g.m(), odd_girth(&g)), (8, 10, Some(5)));
    let x = x15();
    assert_eq!((x.n(), x.m(), odd_girth(&x)), (15, 20, Some(7)));
    assert!((X15_FIRST_X..15).all(|v| x.degree(v) == 2));
    let c = coxeter();
    assert_eq!((c.n(), c.degree_sequence()), (28, vec![3; 28]));
    assert!(cycles_of_length(&c, 3).is_empty() && cycles_of_length(&c, 4).is_empty());
    assert!(cycles_of_length(&c, 5).is_empty() && cycles_of_length(&c, 6).is_empty());
    assert!(!cycles_of_length(&c, 7).is_empty());
}

#[test]
fn gadgets() {
    let t = gadget(4, 2, 2, 2).unwrap();
    assert_eq!(t.graph.n(), 24);
    let hubs = [t.u, t.v, t.w];
    let through = |len: usize| {
        cycles_of_length(&t.graph, len)
            .iter()
            .any(|c| hubs.iter().all(|h| c.contains(h)))
    };
    assert!(!through(3) && !through(4) && !through(5));
    assert!(through(6));
    assert!(through(11));
    assert!(is_k4_minor_free(&t.graph));
    assert_eq!(odd_girth(&gadget(2, 2, 2, 2).unwrap().graph), Some(5));
    assert_eq!(odd_girth(&gadget(3, 1, 1, 3).unwrap().graph), Some(5));
}

#[test]
fn triples() {
    for t in [(2, 2, 2), (1, 1, 2), (1, 2, 2)] {
        assert!(is_k_good(t.0, t.1, t.2, 2).unwrap());
    }
    for k in 1..=12 {
        for p in 1..=k {
            assert!(is_k_good(p, k, k, k).unwrap());
        }
    }
    assert!(!is_k_good(1, 2, 2, 3).unwrap());
    assert_eq!(enumerate_k_good(2).len(), 3);
    let k3: Vec<_> = enumerate_k_good(3).iter().map(|t| t.as_array()).collect();
    assert_eq!(
        k3,
        [
            [1, 1, 2],
            [1, 2, 3],
            [1, 3, 3],
            [2, 2, 2],
            [2, 2, 3],
            [2, 3, 3],
            [3, 3, 3]
        ]
    );
}

#[test]
fn realization() {
    let l = distance_levels(&cycle(5).unwrap());
    assert!(realized_on_edge(&l, 0, 1, 1, 2));
    // Vertex 3 is at distance 2 from both ends of the edge 01.
    assert!(realized_on_edge(&l, 0, 1, 2, 2));
    assert!(!realized_on_edge(&l, 0, 1, 1, 1));
    let g = c8pp();
    let d = all_pairs_distances(&g);
    let l = distance_levels(&g);
    for x in 0..8 {
        for y in 0..8 {
            if x != y && d.get(x, y) == 2 {
                assert!(realized_on_edge(&l, x, y, 2, 2), "pair {x}{y}");
            }
        }
    }
}

#[test]
fn property_checks() {
    let c5 = cycle(5).unwrap();
    match all_k_good_property(&c5, &complete_pdg(&c5, 2), 2) {
        PropertyCheck::Fail { edge, triple } => {
            assert_eq!(edge.weight, 2);
            assert_eq!(triple.as_array(), [2, 2, 2]);
        }
        other => panic!("C5 passed: {other:?}"),
    }
    let g = c8pp();
    let mut pdg = complete_pdg(&g, 2);
    pdg.edges.retain(|e| (e.u, e.v) != (1, 5) && (e.u, e.v) != (3, 7));
    assert!(all_k_good_property(&g, &pdg, 2).is_ok());
    assert!(verify_certificate(&g, &pdg, 2));
    let x = x15();
    let mut pdg = complete_pdg(&x, 3);
    pdg.edges.retain(|e| e.u < X15_FIRST_X || e.v < X15_FIRST_X);
    assert!(all_k_good_property(&x, &pdg, 3).is_ok());
    let pc = projective_cube(2).unwrap();
    assert!(verify_certificate(&pc, &complete_pdg(&pc, 2), 2));
}

#[test]
fn verdicts() {
    let yes = [(c8pp(), 2), (x15(), 3), (petersen(), 2), (grotzsch(), 2)];
    for (g, k) in yes {
        let v = check_bound(&g, k);
        assert_eq!(v.answer, Answer::Yes);
        assert!(verify_certificate(&g, v.certificate.as_ref().unwrap(), k));
    }
    assert_eq!(check_bound(&cycle(5).unwrap(), 2).answer, Answer::No);
    assert_eq!(check_bound(&cycle(7).unwrap(), 3).answer, Answer::No);
}

#[test]
fn c5_no_witness() {
    let c5 = cycle(5).unwrap();
    let v = check_bound(&c5, 2);
    let w = no_certificate(&c5, 2, &v, 10_000).unwrap();
    let t = gadget(2, 2, 2, 2).unwrap().graph;
    assert!(
        hom_search(&t, &w, true, DEFAULT_HOM_BUDGET).unwrap().is_some(),
        "witness contains the gadget"
    );
    assert_eq!(hom_search(&w, &c5, false, DEFAULT_HOM_BUDGET).unwrap(), None);
}

#[test]
fn petersen_minus_vertex_bounds() {
    let g = petersen().without_vertex(0);
    let v = check_bound(&g, 2);
    assert_eq!(v.answer, Answer::Yes);
    assert!(verify_certificate(&g, v.certificate.as_ref().unwrap(), 2));
    let deg2: Vec<_> = (0..g.n()).filter(|&u| g.degree(u) == 2).collect();
    assert_eq!(deg2.len(), 3);
    for u in deg2 {
        assert!(iso(&g.without_vertex(u), &c8pp()));
    }
}

#[test]
fn lints() {
    assert!(minimality_lint(&c8pp(), 2).is_clean());
    assert!(minimality_lint(&x15(), 3).is_clean());
}

#[test]
fn sp_recognition() {
    assert!(is_k4_minor_free(&gadget(4, 2, 2, 2).unwrap().graph));
    assert!(is_k4_minor_free(&path(7).unwrap()));
    assert!(is_k4_minor_free(&cycle(9).unwrap()));
    assert!(!is_k4_minor_free(&complete(4).unwrap()));
    let t = gadget(2, 2, 2, 2).unwrap().graph;
    let d = two_tree_completion(&t).unwrap();
    let full = d.replay(t.n()).unwrap();
    assert_eq!(full.m(), 2 * 12 - 3);
    assert!(t.edges().all(|(u, v)| full.has_edge(u, v)));
}

#[test]
fn random_instances() {
    let g = random_sp_instance(2, 30, 7).unwrap();
    assert!(is_k4_minor_free(&g));
    assert!(odd_girth(&g).is_none_or(|l| l >= 5));
    let g = random_sp_instance(1, 5, 3).unwrap();
    assert!(g.is_connected() && is_k4_minor_free(&g));
}

#[test]
fn homomorphisms() {
    let c5 = cycle(5).unwrap();
    assert_eq!(
        hom_search(&gadget(2, 2, 2, 2).unwrap().graph, &c5, false, DEFAULT_HOM_BUDGET).unwrap(),
        None
    );
    let m = hom_search(&c5, &c5, false, DEFAULT_HOM_BUDGET).unwrap().unwrap();
    let mut image = m.map.clone();
    image.sort_unstable();
    assert_eq!(image, vec![0, 1, 2, 3, 4]);
    let m = hom_search(&grotzsch(), &girthbound::families::clebsch(), true, DEFAULT_HOM_BUDGET).unwrap();
    assert!(m.is_some());
    let k3 = complete(3).unwrap();
    assert!(is_hom(&k3, &k3, &Homomorphism { map: vec![0, 1, 2] }));
}

#[test]
fn certificate_maps() {
    let b = c8pp();
    let cert = check_bound(&b, 2).certificate.unwrap();
    let t = gadget(2, 2, 2, 2).unwrap().graph;
    let m = hom_via_certificate(&t, &b, &cert, 2).unwrap();
    assert!(is_hom(&t, &b, &m));
    assert!(hom_search(&t, &b, false, DEFAULT_HOM_BUDGET).unwrap().is_some());
    let x = x15();
    let cert = check_bound(&x, 3).certificate.unwrap();
    for s in 0..100 {
        let g = random_sp_instance(3, 40, s).unwrap();
        assert!(
            is_hom(&g, &x, &hom_via_certificate(&g, &x, &cert, 3).unwrap()),
            "seed {s}"
        );
    }
}

#[test]
fn colourings() {
    let (g, c) = cayley_edge_labels(3).unwrap();
    assert!(c.is_proper(&g) && c.count == 7);
    let (pc4, col) = cayley_edge_labels(2).unwrap();
    for cyc in cycles_of_length(&pc4, 5) {
        let mut seen: Vec<_> = (0..5)
            .map(|i| col.colour_of(cyc[i], cyc[(i + 1) % 5]).unwrap())
            .collect();
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2, 3, 4]);
    }
    let g = c8pp();
    let c = induced_colouring(&g, 2, &c8pp_embedding()).unwrap();
    assert_eq!(cyclic_colour_orders(&g, &c, 5).unwrap().len(), 2);
    let e = Graph::from_edges(2, [(0, 1)]).unwrap();
    let c = induced_colouring(&e, 1, &Homomorphism { map: vec![0, 1] }).unwrap();
    assert_eq!(c.colour.len(), 1);
}

#[test]
fn x15_induced_colouring() {
    let x = x15();
    let pc6 = projective_cube(3).unwrap();
    let emb = hom_search(&x, &pc6, true, DEFAULT_HOM_BUDGET).unwrap().unwrap();
    let c = induced_colouring(&x, 3, &emb).unwrap();
    assert!(c.is_proper(&x));
    let cycle_colours: std::collections::BTreeSet<_> = (0..10).map(|i| c.colour_of(i, (i + 1) % 10).unwrap()).collect();
    assert_eq!(cycle_colours.len(), 5);
    let mut pendant: Option<std::collections::BTreeSet<u32>> = None;
    for xv in X15_FIRST_X..15 {
        let s: std::collections::BTreeSet<_> = x.neighbors(xv).iter().map(|&u| c.colour_of(xv, u).unwrap()).collect();
        assert_eq!(s.len(), 2);
        assert!(s.is_disjoint(&cycle_colours));
        assert!(pendant.get_or_insert_with(|| s.clone()) == &s);
    }
}

#[test]
fn super_proper() {
    let g = girthbound::families::icosahedron();
    let rot = icosahedron_rotation();
    assert_eq!(
        super_proper_search(&g, &rot, &[(1, 2), (3, 4)], DEFAULT_HOM_BUDGET).unwrap(),
        None
    );
    let plain = super_proper_search(&g, &rot, &[], DEFAULT_HOM_BUDGET).unwrap().unwrap();
    assert!(plain.is_proper(&g));
    let (g, rot) = circulant_12();
    let golden = super_proper_search(&g, &rot, &[(1, 2), (3, 4)], DEFAULT_HOM_BUDGET).unwrap();
    assert!(golden.is_some_and(|c| c.is_proper(&g)));
}
