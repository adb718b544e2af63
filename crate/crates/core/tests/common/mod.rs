//! Brute-force reference implementations used as oracles. They only touch
//! the basic graph accessors of the library.
#![allow(dead_code)]

use usp_graph::{EdgeRelation, Graph};

/// Every chordless 4-cycle as a vertex tuple `(a, b, c, d)` in cycle order,
/// each cycle listed once.
pub fn chordless_squares(g: &Graph) -> Vec<[usize; 4]> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if !distinct || a > b || a > c || a > d || b > d {
                        continue;
                    }
                    let cycle = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a);
                    if cycle && !g.has_edge(a, c) && !g.has_edge(b, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

fn eid(g: &Graph, u: usize, v: usize) -> usize {
    g.edge_between(u, v).expect("edge")
}

/// δ as unordered pairs `e < f`: opposite edges of chordless squares and
/// adjacent edges in no common chordless square.
pub fn delta_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let squares = chordless_squares(g);
    let m = g.edge_count();
    let mut pairs = Vec::new();
    for e in 0..m {
        for f in e + 1..m {
            let (a, b) = g.edge(e);
            let (c, d) = g.edge(f);
            let in_square = |sq: &[usize; 4]| {
                let edges: Vec<usize> = (0..4).map(|i| eid(g, sq[i], sq[(i + 1) % 4])).collect();
                (edges.contains(&e), edges.contains(&f), edges)
            };
            let shared = [a, b].iter().any(|x| *x == c || *x == d);
            if shared {
                let spanned = squares.iter().any(|sq| {
                    let (he, hf, _) = in_square(sq);
                    he && hf
                });
                if !spanned {
                    pairs.push((e, f));
                }
            } else {
                let opposite = squares.iter().any(|sq| {
                    let (_, _, edges) = in_square(sq);
                    (edges[0] == e && edges[2] == f)
                        || (edges[2] == e && edges[0] == f)
                        || (edges[1] == e && edges[3] == f)
                        || (edges[3] == e && edges[1] == f)
                });
                if opposite {
                    pairs.push((e, f));
                }
            }
        }
    }
    pairs
}

/// Transitive closure by label propagation: each edge ends up labeled with
/// the smallest edge of its class.
pub fn closure(m: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..m).collect();
    loop {
        let mut changed = false;
        for &(e, f) in pairs {
            let l = label[e].min(label[f]);
            for x in [e, f] {
                if label[x] != l {
                    label[x] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            return label;
        }
    }
}

/// Whether two labelings induce the same partition.
pub fn same_partition(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
}

pub fn brute_delta_star(g: &Graph) -> Vec<usize> {
    closure(g.edge_count(), &delta_pairs(g))
}

/// Direct evaluation of (S1) and (S2).
pub fn s1_and_s2(g: &Graph, r: &EdgeRelation) -> (bool, bool) {
    let squares = chordless_squares(g);
    let class = |u: usize, v: usize| r.class_of(eid(g, u, v));
    let s2 = squares.iter().all(|&[a, b, c, d]| class(a, b) == class(c, d) && class(b, c) == class(d, a));
    let n = g.vertex_count();
    let mut s1 = true;
    for x in 0..n {
        for u in 0..n {
            for v in u + 1..n {
                if !(g.has_edge(x, u) && g.has_edge(x, v)) || class(x, u) == class(x, v) {
                    continue;
                }
                let count = (0..n)
                    .filter(|&w| {
                        w != x
                            && g.has_edge(w, u)
                            && g.has_edge(w, v)
                            && !g.has_edge(u, v)
                            && !g.has_edge(x, w)
                            && class(x, u) == class(v, w)
                            && class(x, v) == class(u, w)
                    })
                    .count();
                if count != 1 {
                    s1 = false;
                }
            }
        }
    }
    (s1, s2)
}

/// Whether every δ pair lies in one class of `r`.
pub fn contains_delta(g: &Graph, r: &EdgeRelation) -> bool {
    delta_pairs(g).iter().all(|&(e, f)| r.class_of(e) == r.class_of(f))
}

/// All connected graphs on `n` labeled vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        if let Ok(g) = Graph::new(n, edges) {
            out.push(g);
        }
    }
    out
}

/// `V_R(x)` for every `x`, by direct search: `y` is in it iff for every
/// class, `x` and `y` are joined by a path avoiding that class.
pub fn blocks(g: &Graph, r: &EdgeRelation) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let reach = |x: usize, skip: usize| {
        let mut seen = vec![false; n];
        let mut stack = vec![x];
        seen[x] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !seen[v] && g.has_edge(u, v) && r.class_of(eid(g, u, v)) != skip {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    };
    (0..n)
        .map(|x| {
            let per_class: Vec<Vec<bool>> = (0..r.class_count()).map(|c| reach(x, c)).collect();
            (0..n).filter(|&y| per_class.iter().all(|s| s[y])).collect()
        })
        .collect()
}
