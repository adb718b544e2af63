//! Cartesian products, product relations, and the product structure of the
//! quotient `G/P^R`.
//!
//! Products index the pair `(i, j)` as `i * |H| + j`; iterated products use
//! the same mixed radix with the first factor most significant.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, LoopGraph, Vertex};
use crate::partition::{common_refinement, complement_partition, VertexPartition};
use crate::quotient::{quotient_graph, underlying_simple, weighted_quotient, WeightedDigraph};
use crate::relation::{ClassId, EdgeRelation};
use crate::usp::CertifiedUsp;

/// `G □ H` for graphs with loops; a loop is treated as an edge from a vertex
/// to itself, so `(g, h)` carries a loop iff `g` or `h` does.
pub fn cartesian_product_loop(g: &LoopGraph, h: &LoopGraph) -> LoopGraph {
    let nh = h.vertex_count();
    let mut p = LoopGraph::new(g.vertex_count() * nh);
    for (a, b) in g.edges() {
        for j in 0..nh {
            p.add_edge(a * nh + j, b * nh + j);
        }
    }
    for (a, b) in h.edges() {
        for i in 0..g.vertex_count() {
            p.add_edge(i * nh + a, i * nh + b);
        }
    }
    p
}

/// Product of a list of loop graphs; the empty product is `K1`.
pub fn cartesian_product_all(factors: &[LoopGraph]) -> LoopGraph {
    factors
        .iter()
        .fold(LoopGraph::new(1), |acc, f| cartesian_product_loop(&acc, f))
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.vertex_count();
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        edges.extend((0..nh).map(|j| (a * nh + j, b * nh + j)));
    }
    for &(a, b) in h.edges() {
        edges.extend((0..g.vertex_count()).map(|i| (i * nh + a, i * nh + b)));
    }
    Graph::new(g.vertex_count() * nh, edges).expect("product of connected graphs is connected")
}

/// Weighted product: a factor's weight when the other coordinate is fixed,
/// and the sum of both loop weights on the diagonal.
pub fn cartesian_product_weighted(a: &WeightedDigraph, b: &WeightedDigraph) -> WeightedDigraph {
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let mut p = WeightedDigraph::new(na * nb);
    for g1 in 0..na {
        for h1 in 0..nb {
            for g2 in 0..na {
                for h2 in 0..nb {
                    let w = match (g1 == g2, h1 == h2) {
                        (false, true) => a.weight(g1, g2),
                        (true, false) => b.weight(h1, h2),
                        (true, true) => a.weight(g1, g1) + b.weight(h1, h1),
                        (false, false) => 0,
                    };
                    p.set(g1 * nb + h1, g2 * nb + h2, w);
                }
            }
        }
    }
    p
}

pub fn cartesian_product_weighted_all(factors: &[WeightedDigraph]) -> WeightedDigraph {
    factors
        .iter()
        .fold(WeightedDigraph::new(1), |acc, f| cartesian_product_weighted(&acc, f))
}

/// `□ factors` with the relation whose class `j` holds the edges moving in
/// coordinate `j`. Class ids follow factor order; factors without edges get
/// no class.
pub fn product_relation_of(factors: &[Graph]) -> Result<(Graph, EdgeRelation)> {
    if factors.len() < 2 {
        return Err(Error::TooFewFactors);
    }
    let sizes: Vec<usize> = factors.iter().map(Graph::vertex_count).collect();
    let n: usize = sizes.iter().product();
    let mut stride = vec![1; factors.len()];
    for j in (0..factors.len() - 1).rev() {
        stride[j] = stride[j + 1] * sizes[j + 1];
    }
    let mut edges = Vec::new();
    let mut coord = Vec::new();
    for (j, f) in factors.iter().enumerate() {
        for v in 0..n {
            let digit = (v / stride[j]) % sizes[j];
            for &w in f.neighbors(digit) {
                if w > digit {
                    edges.push((v, v + (w - digit) * stride[j]));
                    coord.push(j);
                }
            }
        }
    }
    let g = Graph::new(n, edges.iter().copied())?;
    let mut labels = vec![0; g.edge_count()];
    for (&(u, v), &j) in edges.iter().zip(&coord) {
        labels[g.edge_between(u, v).unwrap()] = j;
    }
    let mut rank = vec![usize::MAX; factors.len()];
    let mut next = 0;
    for (j, f) in factors.iter().enumerate() {
        if f.edge_count() > 0 {
            rank[j] = next;
            next += 1;
        }
    }
    let ids = labels.iter().map(|&j| rank[j]).collect();
    let r = EdgeRelation::from_class_ids(&g, ids)?;
    Ok((g, r))
}

/// A pair of components `G_φ^x`, `G_φ̄^y` whose intersection is not a single
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionViolation {
    pub x: Vertex,
    pub y: Vertex,
    pub intersection: Vec<Vertex>,
}

/// Checks `|V(G_φ^x) ∩ V(G_φ̄^y)| = 1` for all `x, y`; the first violating
/// component pair (by smallest representatives) otherwise. Does not require
/// certification.
pub fn product_criterion(g: &Graph, r: &EdgeRelation, phi: ClassId) -> Result<Option<CriterionViolation>> {
    let inside = crate::partition::class_partition(g, r, phi)?;
    let outside = complement_partition(g, r, phi)?;
    for a in inside.blocks() {
        for b in outside.blocks() {
            let common: Vec<Vertex> = a.iter().copied().filter(|&v| outside.same_block(v, b[0])).collect();
            if common.len() != 1 {
                return Ok(Some(CriterionViolation {
                    x: a[0],
                    y: b[0],
                    intersection: common,
                }));
            }
        }
    }
    Ok(None)
}

/// Outcome of [`is_product_relation_pair`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductRelationTest {
    /// `G ≅ G_φ^x □ G_φ̄^x` with `x` the vertex 0; `map[v]` is the product
    /// index of `v`, checked to be an isomorphism that sends class `φ` to the
    /// first coordinate.
    Product {
        phi: ClassId,
        factors: (Graph, Graph),
        map: Vec<Vertex>,
    },
    NotProduct(CriterionViolation),
}

impl ProductRelationTest {
    pub fn is_product(&self) -> bool {
        matches!(self, ProductRelationTest::Product { .. })
    }
}

/// Tests whether a certified two-class USP-relation is a product relation.
pub fn is_product_relation_pair(c: &CertifiedUsp<'_>) -> Result<ProductRelationTest> {
    let (g, r) = (c.graph(), c.relation());
    if r.class_count() != 2 {
        return Err(Error::NotTwoClasses(r.class_count()));
    }
    split_as_product(g, r, 0)
}

/// The criterion test plus an explicit isomorphism onto the product of the
/// components through vertex 0, for class `phi` of a two-class relation.
pub(crate) fn split_as_product(g: &Graph, r: &EdgeRelation, phi: ClassId) -> Result<ProductRelationTest> {
    if let Some(v) = product_criterion(g, r, phi)? {
        return Ok(ProductRelationTest::NotProduct(v));
    }
    let phi_set = r.class_subset(phi);
    let rest = phi_set.complement();
    let (a, a_members) = g.component_graph(&phi_set, 0);
    let (b, b_members) = g.component_graph(&rest, 0);
    let inside = g.connected_components(&phi_set);
    let outside = g.connected_components(&rest);
    let nb = b.vertex_count();
    // v ↦ (the vertex of G_φ^0 in v's φ̄-component, the vertex of G_φ̄^0 in
    // v's φ-component); unique by the criterion.
    let map: Vec<Vertex> = (0..g.vertex_count())
        .map(|v| {
            let ia = a_members.iter().position(|&w| outside.same_block(w, v)).unwrap();
            let ib = b_members.iter().position(|&w| inside.same_block(w, v)).unwrap();
            ia * nb + ib
        })
        .collect();
    let prod = cartesian_product(&a, &b);
    verify_vertex_map(g, &prod, &map)?;
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let first = map[u] / nb != map[v] / nb;
        if first != (r.class_of(e) == phi) {
            return Err(Error::IsomorphismFailure(format!(
                "edge [{u},{v}] moves in the wrong coordinate"
            )));
        }
    }
    Ok(ProductRelationTest::Product {
        phi,
        factors: (a, b),
        map,
    })
}

fn verify_vertex_map(g: &Graph, h: &Graph, map: &[Vertex]) -> Result<()> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Err(Error::IsomorphismFailure(format!(
            "sizes differ: ({}, {}) vs ({}, {})",
            g.vertex_count(),
            g.edge_count(),
            h.vertex_count(),
            h.edge_count()
        )));
    }
    let mut hit = vec![false; h.vertex_count()];
    for (v, &t) in map.iter().enumerate() {
        if std::mem::replace(&mut hit[t], true) {
            return Err(Error::IsomorphismFailure(format!("vertex {v} collides at {t}")));
        }
    }
    for &(u, v) in g.edges() {
        if !h.has_edge(map[u], map[v]) {
            return Err(Error::IsomorphismFailure(format!("edge [{u},{v}] not preserved")));
        }
    }
    Ok(())
}

/// The explicit isomorphism `G/P^R ≅ □_φ G_φ/P^R_φ̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDecomposition {
    /// `P^R`, whose blocks are the vertices of the quotient.
    pub partition: VertexPartition,
    pub quotient: LoopGraph,
    /// `P^R_φ̄` for each class, in class order.
    pub factor_partitions: Vec<VertexPartition>,
    /// The factor graphs, in class order.
    pub factors: Vec<LoopGraph>,
    /// `tuples[b]` lists, per class, the `P^R_φ̄` block containing block `b`.
    pub tuples: Vec<Vec<usize>>,
    /// `index[b]`: the product vertex of block `b`.
    pub index: Vec<Vertex>,
}

/// Block tuples `V_R(x) ↦ (G_φ̄_1^x, …)` and their product indices, checked
/// for well-definedness and bijectivity.
fn block_tuples(
    partition: &VertexPartition,
    factor_partitions: &[VertexPartition],
) -> Result<(Vec<Vec<usize>>, Vec<Vertex>)> {
    let sizes: Vec<usize> = factor_partitions.iter().map(VertexPartition::block_count).collect();
    let total: usize = sizes.iter().product();
    if total != partition.block_count() {
        return Err(Error::IsomorphismFailure(format!(
            "{} blocks but {} product vertices",
            partition.block_count(),
            total
        )));
    }
    let mut tuples = Vec::with_capacity(partition.block_count());
    let mut index = Vec::with_capacity(partition.block_count());
    let mut hit = vec![false; total];
    for (b, block) in partition.blocks().iter().enumerate() {
        let tuple: Vec<usize> = factor_partitions.iter().map(|p| p.block_of(block[0])).collect();
        for &x in &block[1..] {
            if factor_partitions.iter().zip(&tuple).any(|(p, &t)| p.block_of(x) != t) {
                return Err(Error::IsomorphismFailure(format!(
                    "block {b} is not inside a single block of every factor partition"
                )));
            }
        }
        let idx = tuple.iter().zip(&sizes).fold(0, |acc, (&t, &s)| acc * s + t);
        if std::mem::replace(&mut hit[idx], true) {
            return Err(Error::IsomorphismFailure(format!("block {b} maps onto an earlier block")));
        }
        tuples.push(tuple);
        index.push(idx);
    }
    Ok((tuples, index))
}

fn check_loop_map(quotient: &LoopGraph, product: &LoopGraph, index: &[Vertex]) -> Result<()> {
    for a in 0..quotient.vertex_count() {
        for b in a..quotient.vertex_count() {
            let (q, p) = (quotient.has_edge(a, b), product.has_edge(index[a], index[b]));
            if q != p {
                return Err(Error::IsomorphismFailure(format!(
                    "blocks {a},{b}: adjacent in quotient = {q}, in product = {p}"
                )));
            }
        }
    }
    Ok(())
}

fn factor_data(g: &Graph, r: &EdgeRelation) -> Result<(VertexPartition, Vec<VertexPartition>)> {
    let partition = common_refinement(g, r)?;
    let factor_partitions = (0..r.class_count())
        .map(|phi| complement_partition(g, r, phi))
        .collect::<Result<Vec<_>>>()?;
    Ok((partition, factor_partitions))
}

/// Builds and checks the isomorphism `G/P^R ≅ □_φ G_φ/P^R_φ̄` through the
/// explicit block map. Failure means a bug: the relation is certified.
pub fn verify_quotient_decomposition(c: &CertifiedUsp<'_>) -> Result<ProductDecomposition> {
    let (g, r) = (c.graph(), c.relation());
    let (partition, factor_partitions) = factor_data(g, r)?;
    let quotient = quotient_graph(g, &partition)?.graph;
    let factors = factor_partitions
        .iter()
        .enumerate()
        .map(|(phi, p)| Ok(quotient_graph(&g.spanning_subgraph(&r.class_subset(phi)), p)?.graph))
        .collect::<Result<Vec<_>>>()?;
    let (tuples, index) = block_tuples(&partition, &factor_partitions)?;
    check_loop_map(&quotient, &cartesian_product_all(&factors), &index)?;
    Ok(ProductDecomposition {
        partition,
        quotient,
        factor_partitions,
        factors,
        tuples,
        index,
    })
}

/// The weighted counterpart of [`ProductDecomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDecomposition {
    pub quotient: WeightedDigraph,
    pub factors: Vec<WeightedDigraph>,
    pub index: Vec<Vertex>,
}

/// Checks `→(G/P^R) = □_φ →(G_φ/P^R_φ̄)` arc by arc under the block map.
pub fn verify_weighted_decomposition(c: &CertifiedUsp<'_>) -> Result<WeightedDecomposition> {
    let (g, r) = (c.graph(), c.relation());
    let (partition, factor_partitions) = factor_data(g, r)?;
    let to_iso = |e: Error| match e {
        Error::NotEquitable => Error::IsomorphismFailure("a partition is not equitable".into()),
        other => other,
    };
    let quotient = weighted_quotient(g, &partition).map_err(to_iso)?;
    let factors = factor_partitions
        .iter()
        .enumerate()
        .map(|(phi, p)| weighted_quotient(&g.spanning_subgraph(&r.class_subset(phi)), p).map_err(to_iso))
        .collect::<Result<Vec<_>>>()?;
    let (_, index) = block_tuples(&partition, &factor_partitions)?;
    let product = cartesian_product_weighted_all(&factors);
    let k = partition.block_count();
    for a in 0..k {
        for b in 0..k {
            let (q, p) = (quotient.weight(a, b), product.weight(index[a], index[b]));
            if q != p {
                return Err(Error::IsomorphismFailure(format!(
                    "arc ({a},{b}): weight {q} in quotient, {p} in product"
                )));
            }
        }
    }
    Ok(WeightedDecomposition {
        quotient,
        factors,
        index,
    })
}

/// Checks `G/P^R ≅ □_φ 𝒩(G/P^R_φ̄)` and that `G/P^R` has no loops. Requires
/// every component of every `G_φ̄` to be an induced subgraph of `G`.
pub fn verify_loopless_decomposition(c: &CertifiedUsp<'_>) -> Result<ProductDecomposition> {
    let (g, r) = (c.graph(), c.relation());
    if let Some(phi) = (0..r.class_count()).find(|&phi| !g.components_induced(&r.complement_subset(phi))) {
        return Err(Error::PreconditionNotMet(format!(
            "the complement of class {phi} has a non-induced component"
        )));
    }
    let (partition, factor_partitions) = factor_data(g, r)?;
    let quotient = quotient_graph(g, &partition)?.graph;
    if quotient.loop_count() > 0 {
        return Err(Error::IsomorphismFailure("G/P^R has a loop".into()));
    }
    let factors = factor_partitions
        .iter()
        .map(|p| Ok(underlying_simple(&quotient_graph(g, p)?.graph).graph))
        .collect::<Result<Vec<_>>>()?;
    let (tuples, index) = block_tuples(&partition, &factor_partitions)?;
    check_loop_map(&quotient, &cartesian_product_all(&factors), &index)?;
    Ok(ProductDecomposition {
        partition,
        quotient,
        factor_partitions,
        factors,
        tuples,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::{are_isomorphic, loop_graphs_isomorphic};
    use crate::square_property::compute_delta;
    use crate::usp::UspBudget;

    fn certified<'g>(g: &'g Graph, r: &EdgeRelation) -> CertifiedUsp<'g> {
        CertifiedUsp::certify(g, r, None, &UspBudget::default()).unwrap()
    }

    fn looped_k1(weight: u32) -> WeightedDigraph {
        let mut w = WeightedDigraph::new(1);
        w.set(0, 0, weight);
        w
    }

    #[test]
    fn simple_products() {
        let k2 = fixtures::k2();
        assert!(are_isomorphic(&cartesian_product(&k2, &k2), &fixtures::c4()).unwrap());
        let prism = fixtures::prism();
        assert_eq!(cartesian_product(&fixtures::cycle(6), &k2), prism.graph);
        let mut lk1 = LoopGraph::new(1);
        lk1.add_edge(0, 0);
        let p = cartesian_product_loop(&fixtures::c4().to_loop_graph(), &lk1);
        assert_eq!(p.loop_count(), 4);
        assert_eq!(p.without_loops(), fixtures::c4().to_loop_graph());
    }

    #[test]
    fn weighted_products() {
        let mut arc = WeightedDigraph::new(2);
        arc.set(0, 1, 2);
        let p = cartesian_product_weighted(&arc, &WeightedDigraph::new(1));
        assert_eq!(p.arcs().collect::<Vec<_>>(), vec![(0, 1, 2)]);
        let p = cartesian_product_weighted(&looped_k1(1), &looped_k1(1));
        assert_eq!(p.weight(0, 0), 2);
    }

    #[test]
    fn product_relations() {
        let (g, r) = product_relation_of(&[fixtures::cycle(6), fixtures::k2()]).unwrap();
        let prism = fixtures::prism();
        assert_eq!(g, prism.graph);
        assert!(r.same_partition(prism.relation().unwrap()));
        let k2 = fixtures::k2();
        let (q3, r) = product_relation_of(&[k2.clone(), k2.clone(), k2.clone()]).unwrap();
        assert!(are_isomorphic(&q3, &fixtures::q3()).unwrap());
        assert!(r.same_partition(&compute_delta(&q3)));
        assert_eq!(product_relation_of(&[k2]), Err(Error::TooFewFactors));
    }

    #[test]
    fn product_relation_pairs() {
        let prism = fixtures::prism();
        let c = certified(&prism.graph, prism.relation().unwrap());
        let ProductRelationTest::Product { factors: (a, b), .. } = is_product_relation_pair(&c).unwrap() else {
            panic!("prism is a product");
        };
        assert!(are_isomorphic(&a, &fixtures::cycle(6)).unwrap());
        assert!(are_isomorphic(&b, &fixtures::k2()).unwrap());

        let m8 = fixtures::m8();
        let c = certified(&m8.graph, m8.relation().unwrap());
        let ProductRelationTest::NotProduct(v) = is_product_relation_pair(&c).unwrap() else {
            panic!("m8 is prime");
        };
        assert_eq!(v.intersection.len(), 2);

        let c4 = fixtures::c4();
        assert!(is_product_relation_pair(&certified(&c4, &compute_delta(&c4))).unwrap().is_product());
        let q3 = fixtures::q3();
        assert_eq!(
            is_product_relation_pair(&certified(&q3, &compute_delta(&q3))).unwrap_err(),
            Error::NotTwoClasses(3)
        );
    }

    #[test]
    fn m8_quotient_decomposition() {
        let m8 = fixtures::m8();
        let c = certified(&m8.graph, m8.relation().unwrap());
        let d = verify_quotient_decomposition(&c).unwrap();
        let mut lk1 = LoopGraph::new(1);
        lk1.add_edge(0, 0);
        let expected = cartesian_product_loop(&fixtures::c4().to_loop_graph(), &lk1);
        assert!(loop_graphs_isomorphic(&d.quotient, &expected).unwrap());
        let cyc = m8.class_id("CYC");
        assert!(loop_graphs_isomorphic(&d.factors[cyc], &fixtures::c4().to_loop_graph()).unwrap());
        assert!(loop_graphs_isomorphic(&d.factors[1 - cyc], &lk1).unwrap());

        let w = verify_weighted_decomposition(&c).unwrap();
        assert!(w.quotient.arcs().all(|(_, _, x)| x == 1));
        assert!(matches!(verify_loopless_decomposition(&c), Err(Error::PreconditionNotMet(_))));
    }

    #[test]
    fn prism_and_trivial_decompositions() {
        let prism = fixtures::prism();
        let c = certified(&prism.graph, prism.relation().unwrap());
        let d = verify_quotient_decomposition(&c).unwrap();
        assert!(d.partition.is_discrete());
        assert!(verify_weighted_decomposition(&c).is_ok());
        assert!(verify_loopless_decomposition(&c).is_ok());

        let c4 = fixtures::c4();
        let c = certified(&c4, &compute_delta(&c4));
        assert!(verify_loopless_decomposition(&c).is_ok());
        assert!(verify_weighted_decomposition(&c).is_ok());

        let q3 = fixtures::q3();
        let single = EdgeRelation::single_class(&q3);
        let d = verify_quotient_decomposition(&certified(&q3, &single)).unwrap();
        assert_eq!(d.quotient, q3.to_loop_graph());
    }
}
