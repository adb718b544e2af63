//! A graph together with vertex names and optional labeled relations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSubset, Graph, Vertex};
use crate::relation::{ClassId, EdgeRelation};

/// A relation with the string label of each class (index = class id).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledRelation {
    pub relation: EdgeRelation,
    pub labels: Vec<String>,
}

impl LabeledRelation {
    /// Numbers classes by first appearance of their label in `labels`, which
    /// is given in the same order as `edges`.
    pub fn from_edge_labels(
        g: &Graph,
        edges: &[(Vertex, Vertex)],
        labels: &[String],
    ) -> Result<Self> {
        assert_eq!(edges.len(), labels.len());
        let mut ids: HashMap<&str, ClassId> = HashMap::new();
        let mut names = Vec::new();
        let mut class_of = vec![usize::MAX; g.edge_count()];
        for (&(u, v), l) in edges.iter().zip(labels) {
            let next = names.len();
            let c = *ids.entry(l.as_str()).or_insert(next);
            if c == next {
                names.push(l.clone());
            }
            class_of[g.edge_id(u, v)?] = c;
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::InvalidRelation("some edge has no label".into()));
        }
        Ok(Self {
            relation: EdgeRelation::from_class_ids(g, class_of)?,
            labels: names,
        })
    }

    /// Labels `c0, c1, ...` for an unlabeled relation.
    pub fn with_default_labels(relation: EdgeRelation) -> Self {
        let labels = (0..relation.class_count()).map(|c| format!("c{c}")).collect();
        Self { relation, labels }
    }

    pub fn class_id(&self, label: &str) -> Option<ClassId> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A named graph, optionally with a labeled relation and a labeled witness
/// relation that should be finer than it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub vertex_names: Vec<String>,
    pub relation: Option<LabeledRelation>,
    pub witness: Option<LabeledRelation>,
}

impl Instance {
    /// An instance whose vertices are named by their ids.
    pub fn unnamed(name: &str, graph: Graph) -> Self {
        let vertex_names = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
        Self {
            name: name.to_string(),
            graph,
            vertex_names,
            relation: None,
            witness: None,
        }
    }

    pub fn with_relation(mut self, r: LabeledRelation) -> Self {
        self.relation = Some(r);
        self
    }

    pub fn with_witness(mut self, w: LabeledRelation) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn relation(&self) -> Option<&EdgeRelation> {
        self.relation.as_ref().map(|r| &r.relation)
    }

    pub fn witness(&self) -> Option<&EdgeRelation> {
        self.witness.as_ref().map(|r| &r.relation)
    }

    /// Class labels of the relation; empty without one.
    pub fn class_labels(&self) -> Vec<String> {
        match &self.relation {
            Some(r) => r.labels.clone(),
            None => Vec::new(),
        }
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.vertex_names.iter().position(|n| n == name)
    }

    /// Class id of a relation label. Panics if there is no such class.
    pub fn class_id(&self, label: &str) -> ClassId {
        self.relation
            .as_ref()
            .and_then(|r| r.class_id(label))
            .unwrap_or_else(|| panic!("{}: no class labeled {label}", self.name))
    }

    /// The edges of a labeled class. Panics if there is no such class.
    pub fn class_subset(&self, label: &str) -> EdgeSubset {
        self.relation().unwrap().class_subset(self.class_id(label))
    }

    /// Edge id between two named vertices. Panics if absent.
    pub fn edge(&self, a: &str, b: &str) -> EdgeId {
        let u = self.vertex(a).unwrap_or_else(|| panic!("no vertex {a}"));
        let v = self.vertex(b).unwrap_or_else(|| panic!("no vertex {b}"));
        self.graph
            .edge_between(u, v)
            .unwrap_or_else(|| panic!("no edge [{a},{b}]"))
    }

    /// Renders `v` by name.
    pub fn name_of(&self, v: Vertex) -> &str {
        &self.vertex_names[v]
    }

    pub fn edge_names(&self, e: EdgeId) -> (&str, &str) {
        let (u, v) = self.graph.edge(e);
        (self.name_of(u), self.name_of(v))
    }
}
