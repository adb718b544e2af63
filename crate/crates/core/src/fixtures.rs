//! Small named graphs and relations used throughout tests and examples.

use crate::graph::{Graph, Vertex};
use crate::instance::{Instance, LabeledRelation};

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("fixture graph is valid")
}

fn labeled(name: &str, names: Vec<String>, edges: &[(Vertex, Vertex, &str)]) -> Instance {
    let plain: Vec<(Vertex, Vertex)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    let g = build(names.len(), &plain);
    let labels: Vec<String> = edges.iter().map(|&(_, _, l)| l.to_string()).collect();
    let r = LabeledRelation::from_edge_labels(&g, &plain, &labels).expect("fixture labels");
    Instance {
        name: name.to_string(),
        graph: g,
        vertex_names: names,
        relation: Some(r),
        witness: None,
    }
}

fn one_based(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

pub fn k1() -> Graph {
    build(1, &[])
}

pub fn k2() -> Graph {
    path(2)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    build(n, &edges)
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    build(k + 1, &edges)
}

pub fn c4() -> Graph {
    cycle(4)
}

pub fn k3() -> Graph {
    complete(3)
}

/// The 3-cube on 3-bit vertex ids.
pub fn q3() -> Graph {
    let mut edges = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                edges.push((v, v | bit));
            }
        }
    }
    build(8, &edges)
}

/// `C6 □ K2` with vertex `(i, j)` at id `2i + j`; classes HEX and RUNG.
pub fn prism() -> Instance {
    let names = (0..12).map(|v| format!("{}{}", v / 2, v % 2)).collect();
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in 0..2 {
            edges.push((2 * i + j, 2 * ((i + 1) % 6) + j, "HEX"));
        }
    }
    for i in 0..6 {
        edges.push((2 * i, 2 * i + 1, "RUNG"));
    }
    labeled("prism", names, &edges)
}

/// Möbius ladder on 8 vertices; classes CYC (the 8-cycle) and CHD (chords
/// `i ~ i+4`).
pub fn m8() -> Instance {
    let names = (0..8).map(|v| v.to_string()).collect();
    let mut edges: Vec<(Vertex, Vertex, &str)> = (0..8).map(|i| (i, (i + 1) % 8, "CYC")).collect();
    edges.extend((0..4).map(|i| (i, i + 4, "CHD")));
    labeled("m8", names, &edges)
}

/// `K_{3,3}` drawn as a hexagon `1..6` (class c1) with its three diameters
/// (class c2). The relation has the unique square property but not the
/// square property.
pub fn fig1() -> Instance {
    let mut edges: Vec<(Vertex, Vertex, &str)> = (0..6).map(|i| (i, (i + 1) % 6, "c1")).collect();
    edges.extend((0..3).map(|i| (i, i + 3, "c2")));
    labeled("fig1", one_based(6), &edges)
}

/// Cube coordinates of the vertices `1..8` of [`fig2`].
const FIG2_BITS: [usize; 8] = [0b000, 0b100, 0b110, 0b010, 0b001, 0b101, 0b111, 0b011];

/// The cube with its four body diagonals (`K_{4,4}`). The witness has one
/// class per translation vector (`phi1 = 100`, `phi2 = 010`, `phi3 = 001`,
/// `phi4 = 111`); the relation joins them into `psi1 = phi1 ∪ phi2` and
/// `psi2 = phi3 ∪ phi4`, which loses the unique square property.
pub fn fig2() -> Instance {
    let dirs = [(0b100, "phi1", "psi1"), (0b010, "phi2", "psi1"), (0b001, "phi3", "psi2"), (0b111, "phi4", "psi2")];
    let mut q_edges = Vec::new();
    let mut r_edges = Vec::new();
    for (d, q, r) in dirs {
        for u in 0..8 {
            let v = FIG2_BITS.iter().position(|&b| b == FIG2_BITS[u] ^ d).unwrap();
            if u < v {
                q_edges.push((u, v, q));
                r_edges.push((u, v, r));
            }
        }
    }
    let mut inst = labeled("fig2", one_based(8), &r_edges);
    let plain: Vec<_> = q_edges.iter().map(|&(u, v, _)| (u, v)).collect();
    let labels: Vec<String> = q_edges.iter().map(|&(_, _, l)| l.to_string()).collect();
    inst.witness = Some(LabeledRelation::from_edge_labels(&inst.graph, &plain, &labels).unwrap());
    inst
}

/// `K_{3,3} □ K2` on `1..12`: two hexagons `1..6`, `7..12` (phi1), their
/// diameters (phi2), and rungs `i ~ i+6` (phi3).
pub fn fig3() -> Instance {
    let mut edges: Vec<(Vertex, Vertex, &str)> = Vec::new();
    for off in [0, 6] {
        edges.extend((0..6).map(|i| (off + i, off + (i + 1) % 6, "phi1")));
    }
    for off in [0, 6] {
        edges.extend((0..3).map(|i| (off + i, off + i + 3, "phi2")));
    }
    edges.extend((0..6).map(|i| (i, i + 6, "phi3")));
    labeled("fig3", one_based(12), &edges)
}

/// Every named fixture that carries a relation.
pub fn labeled_fixtures() -> Vec<Instance> {
    vec![prism(), m8(), fig1(), fig2(), fig3()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!((c4().edge_count(), k3().edge_count(), q3().edge_count()), (4, 3, 12));
        let p = prism();
        assert_eq!((p.graph.vertex_count(), p.graph.edge_count()), (12, 18));
        assert_eq!(p.relation().unwrap().class(p.class_id("RUNG")).len(), 6);
        assert_eq!(m8().graph.edge_count(), 12);
        assert_eq!(fig1().graph.edge_count(), 9);
        let f2 = fig2();
        assert_eq!(f2.graph.edge_count(), 16);
        assert_eq!(f2.witness().unwrap().class_count(), 4);
        assert!(f2.witness().unwrap().is_finer(f2.relation().unwrap()).unwrap());
        assert_eq!(fig3().graph.edge_count(), 24);
        assert_eq!(star(3).degree(0), 3);
    }
}
