//! Graphviz output.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, LoopGraph};
use crate::partition::VertexPartition;
use crate::quotient::WeightedDigraph;
use crate::relation::EdgeRelation;

/// Edge attributes per class id for up to eight classes.
pub const DEFAULT_STYLES: [&str; 8] = [
    "style=solid",
    "style=dashed",
    "style=dotted",
    "style=bold",
    "color=red",
    "color=blue",
    "color=darkgreen",
    "color=orange",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// What to draw besides the graph itself.
#[derive(Clone, Debug, Default)]
pub struct DotOptions<'a> {
    pub relation: Option<&'a EdgeRelation>,
    pub class_labels: Option<&'a [String]>,
    pub partition: Option<&'a VertexPartition>,
    /// Attribute string per class; replaces [`DEFAULT_STYLES`].
    pub styles: Option<&'a [String]>,
}

/// Undirected DOT text: classes become edge styles, partition blocks become
/// clusters.
pub fn export_dot(name: &str, g: &Graph, vertex_names: &[String], opts: &DotOptions) -> Result<String> {
    let styles: Vec<String> = match (opts.relation, opts.styles) {
        (None, _) => Vec::new(),
        (Some(r), Some(s)) => {
            if s.len() < r.class_count() {
                return Err(Error::TooManyClasses(r.class_count()));
            }
            s.to_vec()
        }
        (Some(r), None) => {
            if r.class_count() > DEFAULT_STYLES.len() {
                return Err(Error::TooManyClasses(r.class_count()));
            }
            DEFAULT_STYLES.iter().map(|s| s.to_string()).collect()
        }
    };
    if let Some(r) = opts.relation {
        r.check_graph(g)?;
    }
    if let Some(p) = opts.partition {
        p.check_size(g.vertex_count())?;
    }
    let v = |x: usize| quote(&vertex_names[x]);
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    let _ = writeln!(out, "  node [shape=circle];");
    match opts.partition {
        Some(p) => {
            for (b, block) in p.blocks().iter().enumerate() {
                let _ = writeln!(out, "  subgraph cluster_{b} {{");
                let _ = writeln!(out, "    label=\"B{b}\";");
                for &x in block {
                    let _ = writeln!(out, "    {};", v(x));
                }
                let _ = writeln!(out, "  }}");
            }
        }
        None => {
            for x in 0..g.vertex_count() {
                let _ = writeln!(out, "  {};", v(x));
            }
        }
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let _ = write!(out, "  {} -- {}", v(a), v(b));
        if let Some(r) = opts.relation {
            let c = r.class_of(e);
            let label = opts
                .class_labels
                .map_or_else(|| format!("c{c}"), |l| l[c].clone());
            let _ = write!(out, " [{}, tooltip={}]", styles[c], quote(&label));
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    Ok(out)
}

/// A quotient with loops; vertices are named after blocks `B0, B1, ...`.
pub fn export_quotient_dot(name: &str, q: &LoopGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    for b in 0..q.vertex_count() {
        let _ = writeln!(out, "  B{b};");
    }
    for (a, b) in q.edges() {
        let _ = writeln!(out, "  B{a} -- B{b};");
    }
    out.push_str("}\n");
    out
}

/// A weighted directed quotient with arc weights as labels.
pub fn export_weighted_dot(name: &str, w: &WeightedDigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    for b in 0..w.vertex_count() {
        let _ = writeln!(out, "  B{b};");
    }
    for (a, b, weight) in w.arcs() {
        let _ = writeln!(out, "  B{a} -> B{b} [label=\"{weight}\"];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::partition::common_refinement;
    use crate::quotient::{quotient_graph, weighted_quotient};
    use crate::square_property::compute_delta;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|v| v.to_string()).collect()
    }

    #[test]
    fn c4_has_two_styles() {
        let c4 = fixtures::c4();
        let d = compute_delta(&c4);
        let opts = DotOptions {
            relation: Some(&d),
            ..Default::default()
        };
        let dot = export_dot("c4", &c4, &names(4), &opts).unwrap();
        assert_eq!(dot.matches("style=solid").count(), 2);
        assert_eq!(dot.matches("style=dashed").count(), 2);
        assert_eq!(dot, export_dot("c4", &c4, &names(4), &opts).unwrap());
    }

    #[test]
    fn m8_clusters() {
        let m8 = fixtures::m8();
        let r = m8.relation().unwrap();
        let p = common_refinement(&m8.graph, r).unwrap();
        let labels = m8.class_labels();
        let opts = DotOptions {
            relation: Some(r),
            class_labels: Some(&labels),
            partition: Some(&p),
            styles: None,
        };
        let dot = export_dot("m8", &m8.graph, &m8.vertex_names, &opts).unwrap();
        assert_eq!(dot.matches("subgraph cluster_").count(), 4);
        assert!(dot.contains("tooltip=\"CHD\""));

        let q = quotient_graph(&m8.graph, &p).unwrap();
        let qdot = export_quotient_dot("m8", &q.graph);
        assert!(qdot.contains("B0 -- B0;"));
        let w = weighted_quotient(&m8.graph, &p).unwrap();
        assert!(export_weighted_dot("m8", &w).contains("B0 -> B0 [label=\"1\"];"));
    }

    #[test]
    fn palette_limit() {
        let g = fixtures::path(10);
        let r = EdgeRelation::discrete(&g);
        let opts = DotOptions {
            relation: Some(&r),
            ..Default::default()
        };
        assert_eq!(export_dot("p", &g, &names(10), &opts), Err(Error::TooManyClasses(9)));
        let styles: Vec<String> = (0..9).map(|i| format!("penwidth={}", i + 1)).collect();
        let opts = DotOptions {
            styles: Some(&styles),
            ..opts
        };
        assert!(export_dot("p", &g, &names(10), &opts).unwrap().contains("penwidth=9"));
    }
}
