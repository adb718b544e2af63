//! Quotient graphs of vertex partitions: undirected with loops, directed and
//! weighted for equitable partitions, and the underlying simple graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, EdgeSubset, LoopGraph, Vertex};
use crate::partition::{is_equitable, Equitability, VertexPartition};

/// `G/P`: one vertex per block (numbered as in the partition), an edge
/// between blocks joined by some edge of `G`, and a loop at every block that
/// is not independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub partition: VertexPartition,
    pub graph: LoopGraph,
}

impl QuotientGraph {
    pub fn blocks(&self) -> &[Vec<Vertex>] {
        self.partition.blocks()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }
}

pub fn quotient_graph<A: Adjacency + ?Sized>(g: &A, p: &VertexPartition) -> Result<QuotientGraph> {
    p.check_size(g.vertex_count())?;
    let mut q = LoopGraph::new(p.block_count());
    for u in 0..g.vertex_count() {
        for &v in g.neighbors(u) {
            if u <= v {
                q.add_edge(p.block_of(u), p.block_of(v));
            }
        }
    }
    Ok(QuotientGraph {
        partition: p.clone(),
        graph: q,
    })
}

/// A directed graph with loops and positive integer arc weights; weight 0
/// means no arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightedDigraph {
    n: usize,
    weights: Vec<u32>,
}

impl WeightedDigraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            weights: vec![0; n * n],
        }
    }

    /// All arc weights 1 in both directions for each edge and loop of `g`.
    pub fn from_loop_graph(g: &LoopGraph) -> Self {
        let mut w = Self::new(g.vertex_count());
        for (u, v) in g.edges() {
            w.set(u, v, 1);
            w.set(v, u, 1);
        }
        w
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn weight(&self, a: Vertex, b: Vertex) -> u32 {
        self.weights[a * self.n + b]
    }

    pub fn set(&mut self, a: Vertex, b: Vertex, w: u32) {
        self.weights[a * self.n + b] = w;
    }

    /// Arcs `(a, b, weight)` with positive weight, in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        (0..self.n).flat_map(move |a| {
            (0..self.n).filter_map(move |b| {
                let w = self.weight(a, b);
                (w > 0).then_some((a, b, w))
            })
        })
    }

    pub fn arc_count(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0).count()
    }

    /// Forgets weights and directions; keeps loops.
    pub fn underlying(&self) -> LoopGraph {
        let mut g = LoopGraph::new(self.n);
        for (a, b, _) in self.arcs() {
            g.add_edge(a, b);
        }
        g
    }
}

/// `→(G/P)`: arc `(A, B)` with weight `m_AB` whenever it is positive.
pub fn weighted_quotient<A: Adjacency + ?Sized>(g: &A, p: &VertexPartition) -> Result<WeightedDigraph> {
    let m = match is_equitable(g, p)? {
        Equitability::Equitable(m) => m,
        Equitability::Violated(_) => return Err(Error::NotEquitable),
    };
    let k = p.block_count();
    let mut w = WeightedDigraph::new(k);
    for a in 0..k {
        for b in 0..k {
            w.set(a, b, m.get(a, b) as u32);
        }
    }
    Ok(w)
}

/// `𝒩(·)`: loops dropped. Quotients of spanning subgraphs may be
/// disconnected, so connectivity is reported rather than enforced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlyingSimple {
    pub graph: LoopGraph,
    pub connected: bool,
}

impl UnderlyingSimple {
    /// As a [`Graph`], when connected.
    pub fn to_graph(&self) -> Result<Graph> {
        self.graph.to_graph()
    }
}

pub fn underlying_simple(q: &LoopGraph) -> UnderlyingSimple {
    let graph = q.without_loops();
    let connected = graph.is_connected();
    UnderlyingSimple { graph, connected }
}

/// Whether the projection of `(V, s)` onto `(V, s)/p` is locally bijective:
/// the `s`-neighbors of every vertex land in pairwise distinct blocks that
/// make up all quotient neighbors of its block (its own block counts when
/// the block carries a loop).
pub fn is_covering_projection(g: &Graph, s: &EdgeSubset, p: &VertexPartition) -> Result<bool> {
    p.check_size(g.vertex_count())?;
    if s.len() != g.edge_count() {
        return Err(Error::GraphMismatch);
    }
    let sub = g.spanning_subgraph(s);
    let q = quotient_graph(&sub, p)?;
    for x in 0..g.vertex_count() {
        let mut images: Vec<usize> = sub.neighbors(x).iter().map(|&y| p.block_of(y)).collect();
        images.sort_unstable();
        let len = images.len();
        images.dedup();
        if images.len() != len {
            return Ok(false);
        }
        let targets: Vec<usize> = q.graph.neighbors(p.block_of(x)).collect();
        if images != targets {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::partition::common_refinement;

    fn c4_with_loops() -> LoopGraph {
        let mut q = LoopGraph::new(4);
        for i in 0..4 {
            q.add_edge(i, i);
            q.add_edge(i, (i + 1) % 4);
        }
        q
    }

    #[test]
    fn quotients_of_fixtures() {
        let m8 = fixtures::m8();
        let p = common_refinement(&m8.graph, m8.relation().unwrap()).unwrap();
        let q = quotient_graph(&m8.graph, &p).unwrap();
        assert_eq!(q.graph, c4_with_loops());

        let c4 = fixtures::c4();
        let q = quotient_graph(&c4, &VertexPartition::singletons(4)).unwrap();
        assert_eq!(q.graph, c4.to_loop_graph());

        let p = VertexPartition::from_blocks(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        let q = quotient_graph(&c4, &p).unwrap();
        assert_eq!(q.graph.edges().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (1, 1)]);
        assert_eq!(
            quotient_graph(&c4, &VertexPartition::singletons(3)),
            Err(Error::PartitionMismatch)
        );
    }

    #[test]
    fn weighted_quotients() {
        let m8 = fixtures::m8();
        let p = common_refinement(&m8.graph, m8.relation().unwrap()).unwrap();
        let w = weighted_quotient(&m8.graph, &p).unwrap();
        assert!(w.arcs().all(|(_, _, x)| x == 1));
        assert_eq!(w.underlying(), c4_with_loops());

        let c4 = fixtures::c4();
        let p = VertexPartition::from_blocks(4, &[vec![0, 2], vec![1, 3]]).unwrap();
        let w = weighted_quotient(&c4, &p).unwrap();
        assert_eq!(w.arcs().collect::<Vec<_>>(), vec![(0, 1, 2), (1, 0, 2)]);
        assert_eq!(underlying_simple(&w.underlying()).to_graph().unwrap(), fixtures::k2());

        let w = weighted_quotient(&c4, &VertexPartition::singletons(4)).unwrap();
        assert_eq!(w, WeightedDigraph::from_loop_graph(&c4.to_loop_graph()));

        let p3 = fixtures::path(3);
        let p = VertexPartition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(weighted_quotient(&p3, &p), Err(Error::NotEquitable));
    }

    #[test]
    fn underlying_simple_graphs() {
        let u = underlying_simple(&c4_with_loops());
        assert!(u.connected);
        assert_eq!(u.to_graph().unwrap(), fixtures::c4());
        let mut k1 = LoopGraph::new(1);
        k1.add_edge(0, 0);
        assert_eq!(underlying_simple(&k1).to_graph().unwrap(), fixtures::k1());
        assert!(!underlying_simple(&LoopGraph::new(2)).connected);
    }

    #[test]
    fn covering_projections() {
        let m8 = fixtures::m8();
        let p = VertexPartition::from_blocks(8, &[vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]]).unwrap();
        assert!(is_covering_projection(&m8.graph, &m8.class_subset("CYC"), &p).unwrap());

        let prism = fixtures::prism();
        let rungs: Vec<Vec<usize>> = (0..6).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let p = VertexPartition::from_blocks(12, &rungs).unwrap();
        assert!(is_covering_projection(&prism.graph, &prism.class_subset("HEX"), &p).unwrap());

        let star = fixtures::star(3);
        let p = VertexPartition::from_blocks(4, &[vec![0], vec![1, 2, 3]]).unwrap();
        assert!(!is_covering_projection(&star, &EdgeSubset::full(3), &p).unwrap());
    }
}
