//! Seeded random instances for the theorem harness.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::fixtures;
use crate::graph::Graph;
use crate::product::product_relation_of;
use crate::relation::EdgeRelation;
use crate::square_property::compute_delta;

/// How a suite instance was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Origin {
    Fixture,
    ProductRelation,
    Delta,
    Coarsening,
    Bundle,
    Perturbed,
}

impl Origin {
    pub fn name(self) -> &'static str {
        match self {
            Origin::Fixture => "fixture",
            Origin::ProductRelation => "product",
            Origin::Delta => "delta",
            Origin::Coarsening => "coarsening",
            Origin::Bundle => "bundle",
            Origin::Perturbed => "perturbed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratedInstance {
    pub name: String,
    pub origin: Origin,
    pub graph: Graph,
    pub relation: EdgeRelation,
    /// A finer relation expected to satisfy (S1), when the construction
    /// provides one.
    pub witness: Option<EdgeRelation>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform random spanning tree on `n` vertices plus each remaining pair
/// with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("connected by construction")
}

/// Random factors whose vertex counts multiply to at most `max_n`, then the
/// product with its product relation. At least two factors.
pub fn random_product<R: Rng>(rng: &mut R, max_n: usize) -> (Vec<Graph>, Graph, EdgeRelation) {
    loop {
        let mut factors = Vec::new();
        let mut size = 1;
        loop {
            let cap = max_n / size;
            if cap < 2 || (factors.len() >= 2 && rng.gen_bool(0.5)) {
                break;
            }
            let n = rng.gen_range(2..=cap.min(5));
            factors.push(random_connected_graph(rng, n, 0.4));
            size *= n;
        }
        if factors.len() >= 2 {
            let (g, r) = product_relation_of(&factors).expect("at least two factors");
            return (factors, g, r);
        }
    }
}

/// Joins the classes of `r` into random groups (at least one group).
pub fn random_coarsening<R: Rng>(rng: &mut R, r: &EdgeRelation) -> EdgeRelation {
    let k = r.class_count();
    let groups = rng.gen_range(1..=k.max(1));
    let group_of: Vec<usize> = (0..k).map(|_| rng.gen_range(0..groups)).collect();
    r.coarsen(&group_of).expect("one group per class")
}

/// A cycle of `len` copies of `fiber` where consecutive copies are joined
/// vertex by vertex and the closing join is twisted by `twist` (an
/// automorphism of the fiber). Classes: 0 fiber edges, 1 joins.
pub fn cyclic_bundle(fiber: &Graph, len: usize, twist: &[usize]) -> (Graph, EdgeRelation) {
    let f = fiber.vertex_count();
    let id = |layer: usize, v: usize| layer * f + v;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for layer in 0..len {
        for &(u, v) in fiber.edges() {
            edges.push((id(layer, u), id(layer, v)));
            labels.push(0);
        }
    }
    for layer in 0..len {
        for v in 0..f {
            let (a, b) = if layer + 1 < len {
                (id(layer, v), id(layer + 1, v))
            } else {
                (id(layer, v), id(0, twist[v]))
            };
            edges.push((a.min(b), a.max(b)));
            labels.push(1);
        }
    }
    let g = Graph::new(len * f, edges.iter().copied()).expect("bundle is simple and connected");
    let mut ids = vec![0; g.edge_count()];
    for (&(u, v), &label) in edges.iter().zip(&labels) {
        ids[g.edge_between(u, v).expect("edge was added")] = label;
    }
    let r = EdgeRelation::from_labels(&g, &ids).expect("labels match edges");
    (g, r)
}

/// A random cyclic bundle on at most ten vertices: fiber `K2`, `P3` or
/// `C3` with a random automorphism as twist.
pub fn random_bundle<R: Rng>(rng: &mut R) -> (Graph, EdgeRelation) {
    let (fiber, len, twist) = match rng.gen_range(0..3) {
        0 => {
            let twist = if rng.gen_bool(0.5) { vec![1, 0] } else { vec![0, 1] };
            (fixtures::k2(), rng.gen_range(3..=5), twist)
        }
        1 => {
            let twist = if rng.gen_bool(0.5) { vec![2, 1, 0] } else { vec![0, 1, 2] };
            (fixtures::path(3), 3, twist)
        }
        _ => {
            let shift = rng.gen_range(0..3);
            let reflect = rng.gen_bool(0.5);
            let twist = (0..3)
                .map(|v| (if reflect { (3 - v) % 3 } else { v } + shift) % 3)
                .collect();
            (fixtures::cycle(3), 3, twist)
        }
    };
    cyclic_bundle(&fiber, len, &twist)
}

/// Toggles one random vertex pair of `g` while keeping it connected.
pub fn perturb<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let n = g.vertex_count();
    loop {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
        match edges.iter().position(|&(a, b)| (a, b) == (u.min(v), u.max(v))) {
            Some(i) => {
                edges.remove(i);
            }
            None => edges.push((u.min(v), u.max(v))),
        }
        if let Ok(h) = Graph::new(n, edges) {
            return h;
        }
    }
}

/// A random relation with up to `max_classes` classes; used to search for
/// relations on which the checks fail.
pub fn random_relation<R: Rng>(rng: &mut R, g: &Graph, max_classes: usize) -> EdgeRelation {
    let k = rng.gen_range(1..=max_classes.max(1));
    let labels: Vec<usize> = (0..g.edge_count()).map(|_| rng.gen_range(0..k)).collect();
    EdgeRelation::from_labels(g, &labels).expect("labels match edges")
}

fn fixture_instances() -> Vec<GeneratedInstance> {
    fixtures::labeled_fixtures()
        .into_iter()
        .filter_map(|inst| {
            let relation = inst.relation()?.clone();
            Some(GeneratedInstance {
                name: inst.name.clone(),
                origin: Origin::Fixture,
                witness: inst.witness().cloned(),
                graph: inst.graph,
                relation,
            })
        })
        .collect()
}

/// The fixtures followed by `count` random instances with at most
/// `max_n` vertices, all determined by `seed`.
pub fn suite(seed: u64, count: usize, max_n: usize) -> Vec<GeneratedInstance> {
    let mut rng = rng(seed);
    let mut out = fixture_instances();
    for i in 0..count {
        let name = format!("random-{seed}-{i}");
        let pick = rng.gen_range(0..10);
        let inst = match pick {
            0..=2 => {
                let (_, graph, relation) = random_product(&mut rng, max_n);
                GeneratedInstance {
                    name,
                    origin: Origin::ProductRelation,
                    witness: Some(compute_delta(&graph)),
                    graph,
                    relation,
                }
            }
            3..=4 => {
                let n = rng.gen_range(2..=max_n);
                let p = rng.gen_range(0.1..0.6);
                let graph = random_connected_graph(&mut rng, n, p);
                let relation = compute_delta(&graph);
                GeneratedInstance {
                    name,
                    origin: Origin::Delta,
                    witness: None,
                    graph,
                    relation,
                }
            }
            5..=6 => {
                let (_, graph, prod) = random_product(&mut rng, max_n);
                let delta = compute_delta(&graph);
                let base = if rng.gen_bool(0.5) { delta.clone() } else { prod };
                let relation = random_coarsening(&mut rng, &base);
                GeneratedInstance {
                    name,
                    origin: Origin::Coarsening,
                    witness: Some(delta),
                    graph,
                    relation,
                }
            }
            7..=8 => {
                let (graph, relation) = random_bundle(&mut rng);
                let relation = if rng.gen_bool(0.3) {
                    compute_delta(&graph)
                } else {
                    relation
                };
                GeneratedInstance {
                    name,
                    origin: Origin::Bundle,
                    witness: None,
                    graph,
                    relation,
                }
            }
            _ => {
                let (_, base, _) = random_product(&mut rng, max_n);
                let graph = perturb(&mut rng, &base);
                let relation = compute_delta(&graph);
                GeneratedInstance {
                    name,
                    origin: Origin::Perturbed,
                    witness: None,
                    graph,
                    relation,
                }
            }
        };
        out.push(inst);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::square_property::satisfies_s1;

    #[test]
    fn suites_are_reproducible() {
        let a = suite(7, 40, 10);
        let b = suite(7, 40, 10);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
            assert_eq!(x.relation, y.relation);
        }
        assert!(a
            .iter()
            .filter(|i| i.origin != Origin::Fixture)
            .all(|i| i.graph.vertex_count() <= 10));
    }

    #[test]
    fn products_satisfy_s1() {
        let mut r = rng(3);
        for _ in 0..20 {
            let (factors, g, rel) = random_product(&mut r, 10);
            assert!(g.vertex_count() <= 10);
            assert_eq!(
                g.vertex_count(),
                factors.iter().map(Graph::vertex_count).product::<usize>()
            );
            assert!(satisfies_s1(&g, &rel).0);
        }
    }

    #[test]
    fn mobius_bundle() {
        let (g, r) = cyclic_bundle(&fixtures::k2(), 4, &[1, 0]);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        assert_eq!(crate::square_property::s1_violation(&g, &r), None);
        let m8 = fixtures::m8();
        assert!(crate::iso::are_isomorphic(&g, &m8.graph).unwrap());
    }
}
