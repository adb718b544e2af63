//! Vertex partitions induced by edge relations, and equitability.
//!
//! For a class `φ` of `R`, [`class_partition`] gives the components of
//! `G_φ` and [`complement_partition`] the components of `G_φ̄`. Their common
//! refinement over all classes, [`common_refinement`], has the blocks
//! `V_R(x)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, Vertex};
use crate::relation::{ClassId, EdgeRelation};

/// A partition of `0..n` whose blocks are numbered by smallest member, so two
/// partitions are equal exactly when they have the same blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VertexPartition {
    block_of: Vec<usize>,
    blocks: Vec<Vec<Vertex>>,
}

impl VertexPartition {
    /// Groups vertices by equal label.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut id: HashMap<T, usize> = HashMap::new();
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        let mut block_of = Vec::with_capacity(labels.len());
        for (v, l) in labels.iter().enumerate() {
            let next = blocks.len();
            let b = *id.entry(l.clone()).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            blocks[b].push(v);
            block_of.push(b);
        }
        Self { block_of, blocks }
    }

    /// From explicit blocks, which must partition `0..n`.
    pub fn from_blocks(n: usize, blocks: &[Vec<Vertex>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::PartitionMismatch);
            }
            for &v in block {
                if v >= n || labels[v] != usize::MAX {
                    return Err(Error::PartitionMismatch);
                }
                labels[v] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::PartitionMismatch);
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn whole(n: usize) -> Self {
        Self::from_labels(&vec![0u8; n])
    }

    pub fn vertex_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        self.block_of[v]
    }

    /// Members of block `b`, ascending.
    pub fn block(&self, b: usize) -> &[Vertex] {
        &self.blocks[b]
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    /// The block containing `v`.
    pub fn block_containing(&self, v: Vertex) -> &[Vertex] {
        &self.blocks[self.block_of[v]]
    }

    pub fn same_block(&self, u: Vertex, v: Vertex) -> bool {
        self.block_of[u] == self.block_of[v]
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.block_of.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1
    }

    /// Blockwise intersection with `other`.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.vertex_count(), other.vertex_count());
        let labels: Vec<(usize, usize)> = (0..self.vertex_count())
            .map(|v| (self.block_of[v], other.block_of[v]))
            .collect();
        Self::from_labels(&labels)
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count()
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&v| other.same_block(v, b[0])))
    }

    pub(crate) fn check_size(&self, n: usize) -> Result<()> {
        if self.vertex_count() == n {
            Ok(())
        } else {
            Err(Error::PartitionMismatch)
        }
    }
}

/// Components of `G_φ`.
pub fn class_partition(g: &Graph, r: &EdgeRelation, phi: ClassId) -> Result<VertexPartition> {
    r.check_graph(g)?;
    r.check_class(phi)?;
    Ok(g.connected_components(&r.class_subset(phi)))
}

/// Components of `G_φ̄`, the spanning subgraph on all edges outside `φ`.
pub fn complement_partition(g: &Graph, r: &EdgeRelation, phi: ClassId) -> Result<VertexPartition> {
    r.check_graph(g)?;
    r.check_class(phi)?;
    Ok(g.connected_components(&r.complement_subset(phi)))
}

/// The common refinement of all complement partitions; the block containing
/// `x` is `V_R(x)`. With no classes at all (an edgeless graph) this is the
/// single block `V`.
pub fn common_refinement(g: &Graph, r: &EdgeRelation) -> Result<VertexPartition> {
    r.check_graph(g)?;
    let mut acc = VertexPartition::whole(g.vertex_count());
    for phi in 0..r.class_count() {
        acc = acc.intersect(&complement_partition(g, r, phi)?);
    }
    Ok(acc)
}

/// `N_φ(u)`: the neighbors of `u` across edges of class `φ`, ascending.
pub fn neighbor_set_in_class(
    g: &Graph,
    r: &EdgeRelation,
    u: Vertex,
    phi: ClassId,
) -> Result<Vec<Vertex>> {
    r.check_graph(g)?;
    r.check_class(phi)?;
    if u >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.vertex_count(),
        });
    }
    Ok(g.neighbors(u)
        .iter()
        .zip(g.incident_edges(u))
        .filter(|(_, &e)| r.class_of(e) == phi)
        .map(|(&v, _)| v)
        .collect())
}

/// Partition degree matrix: `m[A][B]` neighbors in block `B` for every vertex
/// of block `A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeMatrix {
    entries: Vec<Vec<usize>>,
}

impl DegreeMatrix {
    pub fn from_rows(entries: Vec<Vec<usize>>) -> Self {
        Self { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.entries[a][b]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.entries
    }
}

/// Two vertices of block `a` with different neighbor counts in block `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquitableViolation {
    pub a: usize,
    pub b: usize,
    pub x: Vertex,
    pub x_count: usize,
    pub other: Vertex,
    pub other_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equitability {
    Equitable(DegreeMatrix),
    Violated(EquitableViolation),
}

impl Equitability {
    pub fn matrix(&self) -> Option<&DegreeMatrix> {
        match self {
            Equitability::Equitable(m) => Some(m),
            Equitability::Violated(_) => None,
        }
    }

    pub fn is_equitable(&self) -> bool {
        matches!(self, Equitability::Equitable(_))
    }
}

fn block_counts<A: Adjacency + ?Sized>(g: &A, p: &VertexPartition, x: Vertex) -> Vec<usize> {
    let mut counts = vec![0; p.block_count()];
    for &y in g.neighbors(x) {
        counts[p.block_of(y)] += 1;
    }
    counts
}

/// Checks equitability; on failure reports the lexicographically first
/// `(A, B, x, x')` where `x` is the smallest vertex of `A`.
pub fn is_equitable<A: Adjacency + ?Sized>(g: &A, p: &VertexPartition) -> Result<Equitability> {
    p.check_size(g.vertex_count())?;
    let mut rows = Vec::with_capacity(p.block_count());
    for (a, block) in p.blocks().iter().enumerate() {
        let x = block[0];
        let reference = block_counts(g, p, x);
        let others: Vec<(Vertex, Vec<usize>)> = block[1..]
            .iter()
            .map(|&v| (v, block_counts(g, p, v)))
            .collect();
        for b in 0..p.block_count() {
            if let Some((v, c)) = others.iter().find(|(_, c)| c[b] != reference[b]) {
                return Ok(Equitability::Violated(EquitableViolation {
                    a,
                    b,
                    x,
                    x_count: reference[b],
                    other: *v,
                    other_count: c[b],
                }));
            }
        }
        rows.push(reference);
    }
    Ok(Equitability::Equitable(DegreeMatrix::from_rows(rows)))
}
