#![allow(clippy::needless_range_loop)]

mod common;

use common::*;
use dbclosure::closure::removed_edges;
use dbclosure::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

// ---------------------------------------------------------------- graph core

#[test]
fn distance_matrix_axioms_on_all_small_connected_graphs() {
    for n in 1..=6 {
        for g in all_connected_graphs(n) {
            let d = all_pairs_distances(&g).unwrap();
            let fw = floyd_warshall(&g);
            for u in 0..n {
                assert_eq!(d.get(u, u), 0);
                for v in 0..n {
                    assert_eq!(d.get(u, v), fw[u][v]);
                    assert_eq!(d.get(u, v), d.get(v, u));
                    assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                    for w in 0..n {
                        assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                    }
                }
            }
        }
    }
}

#[test]
fn complement_and_edges_partition_all_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let n = rng.gen_range(1..=15);
        let p = rng.gen_range(0.0..1.0);
        let g = gnp(&mut rng, n, p);
        let comp = complement_edges(&g);
        assert_eq!(comp.len(), n * (n - 1) / 2 - g.edge_count());
        assert!(comp.windows(2).all(|w| w[0] < w[1]));
        let mut all: Vec<(usize, usize)> = g.edges().chain(comp).collect();
        all.sort_unstable();
        let expect: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        assert_eq!(all, expect);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn partition_sets_cover_vertices_and_respect_neighbourhoods(
        seed in any::<u64>(), n in 2usize..=12, p in 0.05f64..0.95
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n, p);
        for x in 0..n {
            for y in 0..n {
                if x == y { continue; }
                let part = edge_partition(&g, x, y).unwrap();
                let mut all = part.closer_to_x.clone();
                all.extend(&part.closer_to_y);
                all.extend(&part.equidistant);
                prop_assert_eq!(sorted(all), (0..n).collect::<Vec<_>>());
                prop_assert!(part.closer_to_x.contains(&x) && part.closer_to_y.contains(&y));
                // (W_xy \ {x}) ∩ N(y) = ∅ and N(y) \ W_yx ⊆ N[x]; x itself lies in
                // W_xy ∩ N(y) exactly when xy is an edge.
                for v in g.neighbors(y) {
                    prop_assert_eq!(part.closer_to_x.contains(&v), v == x);
                    if !part.closer_to_y.contains(&v) {
                        prop_assert!(g.has_edge(x, v) || v == x);
                    }
                }
            }
        }
    }

    #[test]
    fn bfs_route_matches_floyd_warshall(seed in any::<u64>(), n in 1usize..=14, p in 0.05f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n, p);
        prop_assert_eq!(diameter(&g).unwrap(), oracle_diameter(&g));
        prop_assert_eq!(is_distance_balanced(&g).unwrap(), oracle_distance_balanced(&g));
    }
}

// --------------------------------------------------------------- db analysis

#[test]
fn szeged_bounds_and_report_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_connected(&mut rng, n, (i % 10) as f64 / 10.0);
        let sz = szeged_index(&g).unwrap();
        assert!(sz >= g.edge_count() as u64);
        let report = imbalance_report(&g).unwrap();
        assert_eq!(report.records.len(), g.edge_count());
        assert_eq!(report.balanced, is_distance_balanced(&g).unwrap());
        assert_eq!(report.balanced, report.records.iter().all(|r| r.closer_to_x == r.closer_to_y));
        assert_eq!(report.balanced, report.worst_edge.is_none());
    }
    for n in 1..=10 {
        let k = Graph::complete(n).unwrap();
        assert_eq!(szeged_index(&k).unwrap(), k.edge_count() as u64);
    }
}

#[test]
fn regular_diameter_two_graphs_are_balanced_and_conversely() {
    for n in 1..=6 {
        for g in all_connected_graphs(n) {
            if diameter(&g).unwrap() > 2 {
                continue;
            }
            let balanced = is_distance_balanced(&g).unwrap();
            assert_eq!(balanced, regular_degree(&g).is_some(), "{g:?}");
        }
    }
}

#[test]
fn random_regular_graphs_with_diameter_two_are_balanced() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut hits = 0;
    for _ in 0..400 {
        let n = rng.gen_range(4..=20);
        let r = rng.gen_range(2..n);
        if n * r % 2 == 1 {
            continue;
        }
        let g = random_regular(&mut rng, n, r);
        assert_eq!(regular_degree(&g), Some(r));
        if g.is_connected() && diameter(&g).unwrap() <= 2 {
            assert!(is_distance_balanced(&g).unwrap(), "{g:?}");
            hits += 1;
        }
    }
    assert!(hits > 50, "only {hits} diameter-2 samples");
}

// ------------------------------------------------------------------ tree gen

#[test]
fn unlabeled_tree_counts() {
    let counts: Vec<usize> = (1..=9).map(|n| unlabeled_trees(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
}

#[test]
fn classifier_recognizes_exactly_the_high_degree_trees() {
    for n in 1..=9 {
        for t in unlabeled_trees(n) {
            let f = classify_tree(&t).unwrap();
            let high = t.max_degree() + 3 >= n;
            assert_eq!(f.is_recognized(), high, "{t:?}");
            assert_eq!(f.m, t.max_degree());
            if high {
                assert_eq!(t.relabel(&f.relabeling), family_tree(f.tag, f.m).unwrap(), "{t:?}");
            }
        }
    }
}

#[test]
fn classifier_is_label_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for tag in FamilyTag::TREE_FAMILIES {
        for m in tag.min_m().max(3)..=8 {
            let t = family_tree(tag, m).unwrap();
            for _ in 0..500 / 6 + 1 {
                let scrambled = t.relabel(&random_permutation(&mut rng, t.n()));
                let f = classify_tree(&scrambled).unwrap();
                assert_eq!((f.tag, f.m), (tag, m));
                assert_eq!(scrambled.relabel(&f.relabeling), t);
            }
        }
    }
}

#[test]
fn generated_families_are_trees() {
    for tag in FamilyTag::TREE_FAMILIES {
        for m in tag.min_m()..=12 {
            let t = family_tree(tag, m).unwrap();
            assert!(t.is_tree());
            assert_eq!(t.n(), tag.order(m));
        }
    }
    for spec in ["1", "2", "5,4,3", "3,1^4", "2^2,1^3", "7,1"] {
        let s: StarlikeSpec = spec.parse().unwrap();
        let t = starlike(&s);
        assert!(t.is_tree());
        assert_eq!(t.n(), s.order());
    }
}

// ------------------------------------------------------------------- closure

#[test]
fn removed_structures_avoid_tree_edges_and_are_disjoint() {
    for tag in FamilyTag::TREE_FAMILIES {
        for m in 3..=12 {
            let t = family_tree(tag, m).unwrap();
            let Some(removed) = removed_edges(tag, m) else {
                assert!(tag == FamilyTag::S3 && m <= 4);
                continue;
            };
            let mut seen = std::collections::BTreeSet::new();
            for (u, v) in removed {
                assert!(!t.has_edge(u, v), "{tag} m={m} removes tree edge {u}-{v}");
                assert!(seen.insert((u.min(v), u.max(v))), "{tag} m={m} removes {u}-{v} twice");
            }
        }
    }
}

#[test]
fn constructions_are_certified_regular_closures() {
    for tag in FamilyTag::TREE_FAMILIES {
        for m in 3..=12 {
            let t = family_tree(tag, m).unwrap();
            let r = construct_closure(&t).unwrap();
            let cert = &r.certificate;
            assert!(cert.is_valid(), "{tag} m={m}: {cert:?}");
            assert_eq!(cert.matches_formula, Some(true));
            assert!(cert.diameter <= 2);
            let degree = cert.regular_degree.expect("closure is regular");
            match tag {
                FamilyTag::Star => assert_eq!(degree, m),
                FamilyTag::S2 => assert!((m..=m + 1).contains(&degree)),
                _ => assert_eq!(degree, m),
            }
            assert_eq!(r.closure.edge_count(), t.edge_count() + b_formula(tag, m).unwrap());
            assert_eq!(r.b, r.added_edges.len());
            assert!(r.added_edges.iter().all(|&(u, v)| !t.has_edge(u, v) && r.closure.has_edge(u, v)));
            assert!(oracle_distance_balanced(&r.closure));
        }
    }
}

// -------------------------------------------------------------------- search

#[test]
fn witnesses_are_valid_and_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        let g = random_connected(&mut rng, n, 0.3);
        let cfg = SearchConfig { all_witnesses: true, ..SearchConfig::naive() };
        let r = exact_b(&g, &cfg).unwrap();
        for w in &r.witnesses {
            assert_eq!(w.len(), r.b);
            assert!(oracle_distance_balanced(&with_edges(&g, w)));
        }
        assert_eq!(r.witnesses.len() as u64, db_filter_count(&g, r.b).unwrap());
        for k in 0..r.b {
            assert_eq!(db_filter_count(&g, k).unwrap(), 0);
        }
    }
}

#[test]
fn search_is_deterministic_across_runs_and_threads() {
    for t in unlabeled_trees(7).into_iter().filter(|t| t.max_degree() >= 4) {
        let base = exact_b(&t, &SearchConfig::naive()).unwrap();
        for threads in [1, 2, 4] {
            let cfg = SearchConfig { threads, ..SearchConfig::naive() };
            assert_eq!(exact_b(&t, &cfg).unwrap(), base);
        }
    }
}

#[test]
fn regular_supergraph_stream_is_exact() {
    let t = family_tree(FamilyTag::S3, 3).unwrap();
    let all: Vec<Graph> = enumerate_regular_supergraphs(&t, 3).unwrap().collect();
    let mut brute = 0;
    for g in all_graphs(6) {
        if regular_degree(&g) == Some(3) && is_spanning_subgraph(&t, &g).unwrap() {
            brute += 1;
            assert!(all.contains(&g));
        }
    }
    assert_eq!(all.len(), brute);
    assert!(all.iter().any(|g| isomorphic(g, &prism()) && is_distance_balanced(g).unwrap()));
}
