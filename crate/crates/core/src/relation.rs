//! Equivalence relations on the edge set of a graph.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSubset, Graph, Vertex};

pub type ClassId = usize;

/// A partition of `E(G)` into classes with contiguous ids `0..k`.
///
/// Class ids are kept as supplied; [`EdgeRelation::canonical`] renumbers them
/// by smallest member edge. Use [`EdgeRelation::same_partition`] to compare
/// relations irrespective of numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeRelation {
    vertex_count: usize,
    class_of: Vec<ClassId>,
    classes: Vec<Vec<EdgeId>>,
}

impl EdgeRelation {
    /// Uses `ids[e]` as the class of edge `e`. Ids must be exactly `0..k`.
    pub fn from_class_ids(g: &Graph, ids: Vec<ClassId>) -> Result<Self> {
        if ids.len() != g.edge_count() {
            return Err(Error::InvalidRelation(format!(
                "{} class ids for {} edges",
                ids.len(),
                g.edge_count()
            )));
        }
        let k = ids.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (e, &c) in ids.iter().enumerate() {
            classes[c].push(e);
        }
        if let Some(c) = classes.iter().position(Vec::is_empty) {
            return Err(Error::InvalidRelation(format!("class {c} is empty")));
        }
        Ok(Self {
            vertex_count: g.vertex_count(),
            class_of: ids,
            classes,
        })
    }

    /// Classes from arbitrary per-edge labels, numbered by smallest member edge.
    pub fn from_labels<T: Eq + Hash>(g: &Graph, labels: &[T]) -> Result<Self> {
        let mut seen: HashMap<&T, ClassId> = HashMap::new();
        let ids = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(l).or_insert(next)
            })
            .collect();
        Self::from_class_ids(g, ids)
    }

    /// Classes given as edge subsets, which must partition `E(G)`.
    pub fn from_subsets(g: &Graph, subsets: &[EdgeSubset]) -> Result<Self> {
        let mut ids = vec![usize::MAX; g.edge_count()];
        for (c, s) in subsets.iter().enumerate() {
            if s.len() != g.edge_count() {
                return Err(Error::GraphMismatch);
            }
            for e in s.iter() {
                if ids[e] != usize::MAX {
                    return Err(Error::InvalidRelation(format!("edge {e} in two classes")));
                }
                ids[e] = c;
            }
        }
        if let Some(e) = ids.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidRelation(format!("edge {e} has no class")));
        }
        Self::from_class_ids(g, ids)
    }

    /// The trivial relation with one class (empty for an edgeless graph).
    pub fn single_class(g: &Graph) -> Self {
        Self::from_class_ids(g, vec![0; g.edge_count()]).expect("valid ids")
    }

    /// Every edge in its own class.
    pub fn discrete(g: &Graph) -> Self {
        Self::from_class_ids(g, (0..g.edge_count()).collect()).expect("valid ids")
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self, e: EdgeId) -> ClassId {
        self.class_of[e]
    }

    pub fn class_ids(&self) -> &[ClassId] {
        &self.class_of
    }

    /// Member edges of class `c`, ascending.
    pub fn class(&self, c: ClassId) -> &[EdgeId] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<EdgeId>] {
        &self.classes
    }

    pub fn same_class(&self, e: EdgeId, f: EdgeId) -> bool {
        self.class_of[e] == self.class_of[f]
    }

    pub fn check_class(&self, c: ClassId) -> Result<()> {
        if c < self.classes.len() {
            Ok(())
        } else {
            Err(Error::UnknownClassId(c))
        }
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.vertex_count == g.vertex_count() && self.class_of.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    /// The edges of class `c` (the subgraph `G_φ`).
    pub fn class_subset(&self, c: ClassId) -> EdgeSubset {
        EdgeSubset::from_edges(self.edge_count(), self.classes[c].iter().copied())
    }

    /// All edges outside class `c` (the subgraph `G_φ̄`).
    pub fn complement_subset(&self, c: ClassId) -> EdgeSubset {
        self.class_subset(c).complement()
    }

    /// Edges in either of the two classes.
    pub fn union_subset(&self, a: ClassId, b: ClassId) -> EdgeSubset {
        EdgeSubset::from_edges(
            self.edge_count(),
            self.classes[a].iter().chain(&self.classes[b]).copied(),
        )
    }

    /// Classes incident to `v`, with multiplicity per class.
    pub fn class_degrees(&self, g: &Graph, v: Vertex) -> Vec<usize> {
        let mut out = vec![0; self.class_count()];
        for &e in g.incident_edges(v) {
            out[self.class_of[e]] += 1;
        }
        out
    }

    /// Renumbers classes by smallest member edge.
    pub fn canonical(&self) -> Self {
        let mut remap = vec![usize::MAX; self.class_count()];
        let mut next = 0;
        let ids = self
            .class_of
            .iter()
            .map(|&c| {
                if remap[c] == usize::MAX {
                    remap[c] = next;
                    next += 1;
                }
                remap[c]
            })
            .collect();
        Self::rebuild(self.vertex_count, ids)
    }

    /// A relation on the same graph with the given per-edge ids, which may
    /// have gaps; classes are renumbered by smallest member edge.
    pub(crate) fn with_class_ids(&self, class_of: Vec<ClassId>) -> Self {
        assert_eq!(class_of.len(), self.edge_count());
        Self::rebuild(self.vertex_count, class_of).canonical()
    }

    fn rebuild(vertex_count: usize, class_of: Vec<ClassId>) -> Self {
        let k = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (e, &c) in class_of.iter().enumerate() {
            classes[c].push(e);
        }
        Self {
            vertex_count,
            class_of,
            classes,
        }
    }

    /// Equal as partitions of the edge set, ignoring class numbering.
    pub fn same_partition(&self, other: &Self) -> bool {
        self.edge_count() == other.edge_count() && self.canonical() == other.canonical()
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn is_finer(&self, coarser: &Self) -> Result<bool> {
        if self.vertex_count != coarser.vertex_count || self.edge_count() != coarser.edge_count() {
            return Err(Error::GraphMismatch);
        }
        Ok(self
            .classes
            .iter()
            .all(|cls| cls.iter().all(|&e| coarser.same_class(e, cls[0]))))
    }

    /// Unites the named classes; classes are then renumbered by smallest
    /// member edge.
    pub fn merge_classes(&self, ids: &[ClassId]) -> Result<Self> {
        for &c in ids {
            self.check_class(c)?;
        }
        let mut distinct = ids.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() < 2 {
            return Err(Error::MergeNeedsTwoClasses);
        }
        let target = distinct[0];
        let ids = self
            .class_of
            .iter()
            .map(|&c| if distinct.binary_search(&c).is_ok() { target } else { c })
            .collect();
        Ok(Self::rebuild(self.vertex_count, ids).compacted())
    }

    /// Coarsening that groups classes by `group_of[class]`.
    pub fn coarsen(&self, group_of: &[usize]) -> Result<Self> {
        if group_of.len() != self.class_count() {
            return Err(Error::InvalidRelation("group map has the wrong length".into()));
        }
        let ids = self.class_of.iter().map(|&c| group_of[c]).collect();
        Ok(Self::rebuild(self.vertex_count, ids).compacted())
    }

    fn compacted(self) -> Self {
        // drops gaps in the id range and orders ids by smallest member edge
        self.canonical()
    }

    /// Common refinement: edges are related iff related in both relations.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        if self.edge_count() != other.edge_count() {
            return Err(Error::GraphMismatch);
        }
        let mut seen: HashMap<(ClassId, ClassId), ClassId> = HashMap::new();
        let ids = (0..self.edge_count())
            .map(|e| {
                let next = seen.len();
                *seen.entry((self.class_of[e], other.class_of[e])).or_insert(next)
            })
            .collect();
        Ok(Self::rebuild(self.vertex_count, ids))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::square_property::compute_delta;

    #[test]
    fn rejects_gaps_and_wrong_lengths() {
        let c4 = fixtures::c4();
        assert!(EdgeRelation::from_class_ids(&c4, vec![0, 2, 0, 2]).is_err());
        assert!(EdgeRelation::from_class_ids(&c4, vec![0, 1, 0]).is_err());
        let r = EdgeRelation::from_class_ids(&c4, vec![1, 0, 0, 1]).unwrap();
        assert_eq!(r.class(1), &[0, 3]);
        assert_eq!(r.canonical().class_ids(), &[0, 1, 1, 0]);
        assert!(r.same_partition(&r.canonical()));
    }

    #[test]
    fn finer_and_coarser() {
        let q3 = fixtures::q3();
        let delta = compute_delta(&q3);
        let single = EdgeRelation::single_class(&q3);
        assert!(delta.is_finer(&single).unwrap());
        assert!(!single.is_finer(&delta).unwrap());
        assert!(delta.is_finer(&delta).unwrap());
        assert_eq!(delta.is_finer(&EdgeRelation::single_class(&fixtures::c4())), Err(Error::GraphMismatch));
    }

    #[test]
    fn merging() {
        let c4 = fixtures::c4();
        let delta = compute_delta(&c4);
        let merged = delta.merge_classes(&[0, 1]).unwrap();
        assert_eq!(merged.class_count(), 1);
        assert_eq!(delta.merge_classes(&[1]), Err(Error::MergeNeedsTwoClasses));
        assert_eq!(delta.merge_classes(&[1, 1]), Err(Error::MergeNeedsTwoClasses));
        assert_eq!(delta.merge_classes(&[0, 5]), Err(Error::UnknownClassId(5)));

        let q3 = fixtures::q3();
        let delta = compute_delta(&q3);
        assert_eq!(delta.class_count(), 3);
        let s = delta.merge_classes(&[1, 2]).unwrap();
        assert_eq!(s.class_count(), 2);
        let psi: Vec<EdgeId> = {
            let mut v: Vec<EdgeId> = delta.class(1).iter().chain(delta.class(2)).copied().collect();
            v.sort_unstable();
            v
        };
        assert_eq!(s.class(1), psi.as_slice());
        assert_eq!(s.class(0), delta.class(0));
    }

    #[test]
    fn meet_refines_both() {
        let m8 = fixtures::m8();
        let r = m8.relation().unwrap();
        let other = EdgeRelation::from_labels(&m8.graph, &(0..12).map(|e| e % 2).collect::<Vec<_>>()).unwrap();
        let m = r.meet(&other).unwrap();
        assert!(m.is_finer(r).unwrap());
        assert!(m.is_finer(&other).unwrap());
    }
}
