//! The line-oriented instance format.
//!
//! ```text
//! # comment
//! graph m8
//! vertices 0 1 2 3 4 5 6 7
//! edge 0 1 CYC
//! edge 0 4 CHD
//! witness 0 1 a
//! ```
//!
//! `graph` is optional and comes first; `vertices` is required before any
//! edge. Either every `edge` line carries a class label or none does.
//! `witness` lines label every edge a second time and need a labeled
//! relation.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::instance::{Instance, LabeledRelation};

fn parse_error(line: usize, field: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

struct Parser {
    name: Option<String>,
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    vertices_line: Option<usize>,
    edges: Vec<(Vertex, Vertex)>,
    edge_line: HashMap<(Vertex, Vertex), usize>,
    labels: Vec<Option<String>>,
    witness: Vec<(usize, (Vertex, Vertex), String)>,
}

impl Parser {
    fn vertex(&self, line: usize, token: &str) -> Result<Vertex> {
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| parse_error(line, "vertex", format!("unknown vertex {token}")))
    }

    fn endpoints(&self, line: usize, u: &str, v: &str) -> Result<(Vertex, Vertex)> {
        let (a, b) = (self.vertex(line, u)?, self.vertex(line, v)?);
        if a == b {
            return Err(parse_error(line, "edge", format!("loop at {u}")));
        }
        Ok((a.min(b), a.max(b)))
    }

    fn line(&mut self, no: usize, tokens: &[&str]) -> Result<()> {
        match tokens[0] {
            "graph" => {
                if self.name.is_some() || self.vertices_line.is_some() {
                    return Err(parse_error(no, "graph", "graph must be the first record and appear once"));
                }
                match tokens {
                    [_, name] => self.name = Some(name.to_string()),
                    _ => return Err(parse_error(no, "graph", "expected one name")),
                }
            }
            "vertices" => {
                if self.vertices_line.is_some() {
                    return Err(parse_error(no, "vertices", "vertex table given twice"));
                }
                self.vertices_line = Some(no);
                for &t in &tokens[1..] {
                    if self.index.insert(t.to_string(), self.names.len()).is_some() {
                        return Err(parse_error(no, "vertices", format!("duplicate vertex name {t}")));
                    }
                    self.names.push(t.to_string());
                }
                if self.names.is_empty() {
                    return Err(parse_error(no, "vertices", "no vertices"));
                }
            }
            "edge" => {
                if self.vertices_line.is_none() {
                    return Err(parse_error(no, "edge", "edge before the vertices record"));
                }
                let (u, v, label) = match tokens {
                    [_, u, v] => (u, v, None),
                    [_, u, v, l] => (u, v, Some(l.to_string())),
                    _ => return Err(parse_error(no, "edge", "expected two endpoints and an optional label")),
                };
                if let Some(first) = self.labels.first() {
                    if first.is_some() != label.is_some() {
                        return Err(parse_error(no, "label", "either every edge has a label or none does"));
                    }
                }
                let e = self.endpoints(no, u, v)?;
                if let Some(prev) = self.edge_line.insert(e, no) {
                    return Err(parse_error(no, "edge", format!("duplicate of the edge on line {prev}")));
                }
                self.edges.push(e);
                self.labels.push(label);
            }
            "witness" => {
                let [_, u, v, label] = tokens else {
                    return Err(parse_error(no, "witness", "expected two endpoints and a label"));
                };
                let e = self.endpoints(no, u, v)?;
                self.witness.push((no, e, label.to_string()));
            }
            other => return Err(parse_error(no, "keyword", format!("unknown record {other}"))),
        }
        Ok(())
    }

    fn finish(self) -> Result<Instance> {
        if self.vertices_line.is_none() {
            return Err(parse_error(1, "vertices", "missing vertices record"));
        }
        let graph = Graph::new(self.names.len(), self.edges.iter().copied())?;
        let mut inst = Instance {
            name: self.name.unwrap_or_else(|| "unnamed".to_string()),
            graph,
            vertex_names: self.names,
            relation: None,
            witness: None,
        };
        let labeled = self.labels.first().is_some_and(Option::is_some);
        if labeled {
            let labels: Vec<String> = self.labels.into_iter().map(Option::unwrap).collect();
            inst.relation = Some(LabeledRelation::from_edge_labels(&inst.graph, &self.edges, &labels)?);
        }
        if !self.witness.is_empty() {
            let (first, _, _) = self.witness[0];
            if !labeled {
                return Err(parse_error(first, "witness", "a witness needs a labeled relation"));
            }
            let mut seen = HashMap::new();
            for (no, e, _) in &self.witness {
                if !self.edge_line.contains_key(e) {
                    return Err(parse_error(*no, "witness", "not an edge of the graph"));
                }
                if seen.insert(*e, *no).is_some() {
                    return Err(parse_error(*no, "witness", "edge labeled twice"));
                }
            }
            if seen.len() != self.edge_line.len() {
                let missing = self.edges.iter().find(|e| !seen.contains_key(e)).expect("some edge");
                return Err(parse_error(
                    self.edge_line[missing],
                    "witness",
                    "edge has no witness label",
                ));
            }
            let edges: Vec<_> = self.witness.iter().map(|w| w.1).collect();
            let labels: Vec<_> = self.witness.iter().map(|w| w.2.clone()).collect();
            inst.witness = Some(LabeledRelation::from_edge_labels(&inst.graph, &edges, &labels)?);
        }
        Ok(inst)
    }
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut p = Parser {
        name: None,
        names: Vec::new(),
        index: HashMap::new(),
        vertices_line: None,
        edges: Vec::new(),
        edge_line: HashMap::new(),
        labels: Vec::new(),
        witness: Vec::new(),
    };
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !tokens.is_empty() {
            p.line(i + 1, &tokens)?;
        }
    }
    p.finish()
}

/// Writes `inst` so that [`parse_instance`] gives it back unchanged: edges
/// are grouped by class so labels reappear in class-id order.
pub fn format_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {}", inst.name);
    let _ = writeln!(out, "vertices {}", inst.vertex_names.join(" "));
    let g = &inst.graph;
    let line = |out: &mut String, kw: &str, e: usize, label: Option<&str>| {
        let (u, v) = g.edge(e);
        let _ = write!(out, "{kw} {} {}", inst.vertex_names[u], inst.vertex_names[v]);
        if let Some(l) = label {
            let _ = write!(out, " {l}");
        }
        out.push('\n');
    };
    match &inst.relation {
        None => (0..g.edge_count()).for_each(|e| line(&mut out, "edge", e, None)),
        Some(r) => {
            for class in r.relation.classes() {
                for &e in class {
                    line(&mut out, "edge", e, Some(&r.labels[r.relation.class_of(e)]));
                }
            }
        }
    }
    if let Some(w) = &inst.witness {
        for class in w.relation.classes() {
            for &e in class {
                line(&mut out, "witness", e, Some(&w.labels[w.relation.class_of(e)]));
            }
        }
    }
    out
}
