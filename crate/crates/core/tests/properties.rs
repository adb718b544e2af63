mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use usp_graph::harness::{generate, run_all, HarnessInput, HarnessOptions};
use usp_graph::io::{format_instance, parse_instance};
use usp_graph::iso::{canonical_form, find_isomorphism};
use usp_graph::partition::{common_refinement, is_equitable, VertexPartition};
use usp_graph::product::{
    cartesian_product, cartesian_product_loop, cartesian_product_weighted, verify_quotient_decomposition,
    verify_weighted_decomposition,
};
use usp_graph::quotient::{quotient_graph, WeightedDigraph};
use usp_graph::square_property::{compute_delta, delta_pairs, has_square_property, satisfies_s1};
use usp_graph::usp::{CertifiedUsp, UspBudget};
use usp_graph::{EdgeRelation, Graph, Instance, LabeledRelation};

fn graph_from(seed: u64, max_n: usize) -> Graph {
    let mut rng = generate::rng(seed);
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.1..0.8);
    generate::random_connected_graph(&mut rng, n, p)
}

/// Reachability closure by Warshall's algorithm.
fn matrix_closure(m: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut reach = vec![vec![false; m]; m];
    for (e, row) in reach.iter_mut().enumerate() {
        row[e] = true;
    }
    for &(e, f) in pairs {
        reach[e][f] = true;
        reach[f][e] = true;
    }
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..m).map(|e| reach[e].iter().position(|&x| x).unwrap()).collect()
}

proptest! {
    #[test]
    fn delta_star_is_the_closure_of_delta(seed in any::<u64>()) {
        let g = graph_from(seed, 8);
        let d = compute_delta(&g);
        let pairs = delta_pairs(&g);
        prop_assert!(common::same_partition(d.class_ids(), &common::closure(g.edge_count(), &pairs)));
        if g.edge_count() <= 12 {
            prop_assert!(common::same_partition(d.class_ids(), &matrix_closure(g.edge_count(), &pairs)));
        }
        // Classes are numbered by their smallest edge.
        let firsts: Vec<usize> = d.classes().iter().map(|c| c[0]).collect();
        prop_assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn square_property_survives_merging(seed in any::<u64>()) {
        let g = graph_from(seed, 8);
        let mut rng = generate::rng(seed ^ 1);
        let r = generate::random_coarsening(&mut rng, &compute_delta(&g));
        prop_assert!(has_square_property(&g, &r).unwrap());
        if r.class_count() >= 2 {
            let a = rng.gen_range(0..r.class_count());
            let b = (a + 1 + rng.gen_range(0..r.class_count() - 1)) % r.class_count();
            prop_assert!(has_square_property(&g, &r.merge_classes(&[a, b]).unwrap()).unwrap());
        }
    }

    #[test]
    fn product_relations_have_usp_and_coarsen_delta(seed in any::<u64>()) {
        let mut rng = generate::rng(seed);
        let (_, g, r) = generate::random_product(&mut rng, 12);
        prop_assert!(satisfies_s1(&g, &r).0);
        prop_assert!(compute_delta(&g).is_finer(&r).unwrap());
    }

    #[test]
    fn certified_relations_decompose(seed in any::<u64>()) {
        let mut rng = generate::rng(seed);
        let (_, g, prod) = generate::random_product(&mut rng, 10);
        let delta = compute_delta(&g);
        let r = generate::random_coarsening(&mut rng, &prod);
        let c = CertifiedUsp::certify(&g, &r, Some(&delta), &UspBudget::default()).unwrap();
        let p = common_refinement(&g, &r).unwrap();
        prop_assert!(is_equitable(&g, &p).unwrap().is_equitable());
        prop_assert!(verify_quotient_decomposition(&c).is_ok());
        prop_assert!(verify_weighted_decomposition(&c).is_ok());
        // Coarsening only refines the partition.
        if r.class_count() >= 2 {
            let s = c.merge(&[0, 1]).unwrap();
            let ps = common_refinement(&g, s.relation()).unwrap();
            prop_assert!(ps.refines(&p));
        }
    }

    #[test]
    fn harness_passes_on_certified_instances(seed in any::<u64>()) {
        for inst in generate::suite(seed, 3, 9).into_iter().filter(|i| i.origin != generate::Origin::Fixture) {
            let mut input = HarnessInput::new(&inst.name, &inst.graph, &inst.relation);
            input.witness = inst.witness.as_ref();
            let rep = run_all(&input, &HarnessOptions { seed: Some(seed), ..Default::default() }).unwrap();
            prop_assert!(!rep.is_bug(), "{}", rep.to_human());
        }
    }

    #[test]
    fn instance_format_round_trips(seed in any::<u64>(), labeled in any::<bool>()) {
        let g = graph_from(seed, 9);
        let mut rng = generate::rng(seed ^ 3);
        let mut names: Vec<String> = (0..g.vertex_count()).map(|v| format!("v{}", v * 7 % 11)).collect();
        names.dedup();
        prop_assume!(names.len() == g.vertex_count());
        names.shuffle(&mut rng);
        let mut inst = Instance { name: "random".into(), graph: g.clone(), vertex_names: names, relation: None, witness: None };
        if labeled && g.edge_count() > 0 {
            let r = generate::random_relation(&mut rng, &g, 4);
            inst.relation = Some(LabeledRelation::with_default_labels(r));
        }
        let back = parse_instance(&format_instance(&inst)).unwrap();
        let text = format_instance(&inst);
        prop_assert_eq!(back, inst, "{}", text);
    }

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>()) {
        let g = graph_from(seed, 10);
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut generate::rng(seed ^ 5));
        let h = Graph::new(g.vertex_count(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let map = find_isomorphism(&g, &h).unwrap().unwrap();
        prop_assert!(g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v])));
    }

    #[test]
    fn products_count_and_weights(a in any::<u64>(), b in any::<u64>()) {
        let (g, h) = (graph_from(a, 5), graph_from(b, 5));
        let p = cartesian_product(&g, &h);
        let (n, m) = (g.vertex_count(), h.vertex_count());
        prop_assert_eq!(p.vertex_count(), n * m);
        prop_assert_eq!(p.edge_count(), g.edge_count() * m + h.edge_count() * n);
        let w = cartesian_product_weighted(
            &WeightedDigraph::from_loop_graph(&g.to_loop_graph()),
            &WeightedDigraph::from_loop_graph(&h.to_loop_graph()),
        );
        let lp = cartesian_product_loop(&g.to_loop_graph(), &h.to_loop_graph());
        prop_assert_eq!(w, WeightedDigraph::from_loop_graph(&lp));
        prop_assert_eq!(lp, p.to_loop_graph());
    }

    #[test]
    fn quotient_by_singletons_is_the_graph(seed in any::<u64>()) {
        let g = graph_from(seed, 10);
        let q = quotient_graph(&g, &VertexPartition::singletons(g.vertex_count())).unwrap();
        prop_assert_eq!(q.graph, g.to_loop_graph());
    }
}

/// Restricted growth strings: every set partition of `m` items.
fn set_partitions(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                let next = p.iter().max().map_or(0, |x| x + 1);
                (0..=next).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Exhaustively over small graphs and all edge partitions: merging two
/// classes of a relation satisfying S1 keeps S1, and with three or more
/// classes such a relation contains δ.
#[test]
fn s1_contains_delta_and_survives_merging() {
    let mut seen = std::collections::HashSet::new();
    let mut checked = 0;
    for n in 3..=6 {
        for g in common::connected_graphs(n).into_iter().filter(|g| g.edge_count() <= 9) {
            if !seen.insert(canonical_form(&g).unwrap()) {
                continue;
            }
            for ids in set_partitions(g.edge_count()) {
                let r = EdgeRelation::from_labels(&g, &ids).unwrap();
                if !satisfies_s1(&g, &r).0 {
                    continue;
                }
                checked += 1;
                assert!(common::s1_and_s2(&g, &r).0);
                if r.class_count() >= 3 {
                    assert!(common::contains_delta(&g, &r), "{:?} {:?}", g.edges(), ids);
                }
                for a in 0..r.class_count() {
                    for b in a + 1..r.class_count() {
                        let s = r.merge_classes(&[a, b]).unwrap();
                        assert!(satisfies_s1(&g, &s).0, "{:?} {:?} merge {a} {b}", g.edges(), ids);
                    }
                }
            }
        }
    }
    assert!(checked > 100);
}

/// Two classes on K3,3 can satisfy S1 while splitting a δ pair.
#[test]
fn s1_without_delta_on_k33() {
    let g = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
    let r = EdgeRelation::from_labels(&g, &[0, 0, 1, 0, 1, 0, 1, 0, 0]).unwrap();
    assert_eq!(common::s1_and_s2(&g, &r), (true, false));
    assert!(satisfies_s1(&g, &r).0);
    assert!(!has_square_property(&g, &r).unwrap());
}

#[test]
fn discrete_relation_on_a_path_is_not_usp() {
    let g = usp_graph::fixtures::path(3);
    let r = EdgeRelation::discrete(&g);
    assert_eq!(
        usp_graph::usp::certify_usp(&g, &r, None, &UspBudget::default()).unwrap(),
        usp_graph::usp::UspStatus::NotUsp
    );
}
