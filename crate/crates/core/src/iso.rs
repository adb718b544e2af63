//! Isomorphism and canonical forms for small graphs.
//!
//! Backtracking with degree pruning for isomorphism, and
//! refinement-plus-individualization for canonical forms. Both refuse
//! graphs larger than [`ISO_VERTEX_LIMIT`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, LoopGraph, Vertex};

pub const ISO_VERTEX_LIMIT: usize = 12;

/// Dense adjacency with entry 0 for a non-edge and `color + 1` otherwise;
/// diagonal entries are loops.
#[derive(Clone, Debug)]
struct Dense {
    n: usize,
    m: Vec<u32>,
}

impl Dense {
    fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.m[u * self.n + v]
    }

    fn from_graph(g: &Graph, colors: Option<&[usize]>) -> Self {
        let n = g.vertex_count();
        let mut m = vec![0; n * n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            let c = colors.map_or(0, |c| c[e]) as u32 + 1;
            m[u * n + v] = c;
            m[v * n + u] = c;
        }
        Self { n, m }
    }

    fn from_loop_graph(g: &LoopGraph) -> Self {
        let n = g.vertex_count();
        let mut m = vec![0; n * n];
        for (u, v) in g.edges() {
            m[u * n + v] = 1;
            m[v * n + u] = 1;
        }
        Self { n, m }
    }

    /// Sorted nonzero row entries: an isomorphism invariant of `v`.
    fn signature(&self, v: Vertex) -> Vec<u32> {
        let mut s: Vec<u32> = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| self.get(v, u))
            .filter(|&c| c > 0)
            .collect();
        s.sort_unstable();
        s.push(u32::MAX - self.get(v, v));
        s
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > ISO_VERTEX_LIMIT {
        Err(Error::TooLarge {
            n,
            limit: ISO_VERTEX_LIMIT,
        })
    } else {
        Ok(())
    }
}

fn dense_isomorphism(a: &Dense, b: &Dense) -> Option<Vec<Vertex>> {
    if a.n != b.n {
        return None;
    }
    let sa: Vec<_> = (0..a.n).map(|v| a.signature(v)).collect();
    let sb: Vec<_> = (0..b.n).map(|v| b.signature(v)).collect();
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return None;
    }
    // Map vertices with rare signatures first, then grow along edges.
    let mut order: Vec<Vertex> = Vec::with_capacity(a.n);
    let mut placed = vec![false; a.n];
    while order.len() < a.n {
        let next = (0..a.n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| a.get(u, v) > 0).count();
                let rarity = sa.iter().filter(|s| **s == sa[v]).count();
                (links, std::cmp::Reverse(rarity), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    fn extend(
        i: usize,
        order: &[Vertex],
        a: &Dense,
        b: &Dense,
        sa: &[Vec<u32>],
        sb: &[Vec<u32>],
        map: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for w in 0..b.n {
            if used[w] || sa[v] != sb[w] {
                continue;
            }
            let consistent = order[..i].iter().all(|&u| a.get(u, v) == b.get(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if extend(i + 1, order, a, b, sa, sb, map, used) {
                return true;
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
        false
    }
    extend(0, &order, a, b, &sa, &sb, &mut map, &mut used).then_some(map)
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<Vertex>>> {
    check_size(g.vertex_count().max(h.vertex_count()))?;
    if g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    Ok(dense_isomorphism(&Dense::from_graph(g, None), &Dense::from_graph(h, None)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// An isomorphism that maps every edge of color `c` to an edge of the same
/// color `c`.
pub fn find_colored_isomorphism(
    g: &Graph,
    g_colors: &[usize],
    h: &Graph,
    h_colors: &[usize],
) -> Result<Option<Vec<Vertex>>> {
    check_size(g.vertex_count().max(h.vertex_count()))?;
    if g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    Ok(dense_isomorphism(
        &Dense::from_graph(g, Some(g_colors)),
        &Dense::from_graph(h, Some(h_colors)),
    ))
}

/// Isomorphism of graphs with loops.
pub fn loop_graphs_isomorphic(g: &LoopGraph, h: &LoopGraph) -> Result<bool> {
    check_size(g.vertex_count().max(h.vertex_count()))?;
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(dense_isomorphism(&Dense::from_loop_graph(g), &Dense::from_loop_graph(h)).is_some())
}

/// A complete isomorphism invariant: the edge list under a canonical
/// relabeling. Isomorphic graphs, and only those, have equal forms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_size(g.vertex_count())?;
    let n = g.vertex_count();
    let colors = refine(g, vec![0; n]);
    let mut best: Option<Vec<(Vertex, Vertex)>> = None;
    search(g, colors, &mut best);
    Ok(CanonicalForm {
        n,
        edges: best.unwrap_or_default(),
    })
}

/// Color refinement of an ordered partition given as cell indices.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.vertex_count();
    loop {
        let k = colors.iter().copied().max().map_or(0, |c| c + 1);
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0; k];
                for &u in g.neighbors(v) {
                    counts[colors[u]] += 1;
                }
                (colors[v], counts)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|key| sorted.binary_search(key).unwrap())
            .collect();
        if sorted.len() == k {
            return next;
        }
        colors = next;
    }
}

fn are_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let strip = |x: Vertex, other: Vertex| -> Vec<Vertex> {
        g.neighbors(x).iter().copied().filter(|&w| w != other).collect()
    };
    strip(u, v) == strip(v, u)
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<(Vertex, Vertex)>>) {
    let n = g.vertex_count();
    let mut cells: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for v in 0..n {
        cells[colors[v]].push(v);
    }
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut edges: Vec<(Vertex, Vertex)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (colors[u], colors[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    };
    let cell = &cells[target];
    // Transposing twins is an automorphism fixing every other vertex, so
    // one branch covers a cell of pairwise twins.
    let all_twins = cell
        .iter()
        .enumerate()
        .all(|(i, &u)| cell[i + 1..].iter().all(|&v| are_twins(g, u, v)));
    let branches: Vec<Vertex> = if all_twins { vec![cell[0]] } else { cell.clone() };
    for v in branches {
        let split: Vec<(usize, bool)> = (0..n).map(|w| (colors[w], w != v)).collect();
        let mut keys = split.clone();
        keys.sort();
        keys.dedup();
        let individualized = split.iter().map(|k| keys.binary_search(k).unwrap()).collect();
        search(g, refine(g, individualized), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
        Graph::new(g.vertex_count(), g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
    }

    #[test]
    fn isomorphic_relabelings() {
        let perm = [3, 7, 1, 0, 6, 2, 5, 4];
        for g in [fixtures::q3(), fixtures::m8().graph] {
            let h = relabel(&g, &perm);
            let map = find_isomorphism(&g, &h).unwrap().unwrap();
            for &(u, v) in g.edges() {
                assert!(h.has_edge(map[u], map[v]));
            }
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let q3 = fixtures::q3();
        let m8 = fixtures::m8().graph;
        assert!(!are_isomorphic(&q3, &m8).unwrap());
        assert_ne!(canonical_form(&q3).unwrap(), canonical_form(&m8).unwrap());
        assert!(!are_isomorphic(&fixtures::path(4), &fixtures::star(3)).unwrap());
        assert!(are_isomorphic(&fixtures::c4(), &fixtures::cycle(4)).unwrap());
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        let k12 = fixtures::complete(12);
        let form = canonical_form(&k12).unwrap();
        assert_eq!(form.edges.len(), 66);
        assert!(matches!(canonical_form(&fixtures::complete(13)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn colored_isomorphism_respects_colors() {
        let m8 = fixtures::m8();
        let ids = m8.relation().unwrap().class_ids();
        let perm = [1, 2, 3, 4, 5, 6, 7, 0];
        let h = relabel(&m8.graph, &perm);
        let mut h_colors = vec![0; 12];
        for (e, &(u, v)) in m8.graph.edges().iter().enumerate() {
            h_colors[h.edge_between(perm[u], perm[v]).unwrap()] = ids[e];
        }
        assert!(find_colored_isomorphism(&m8.graph, ids, &h, &h_colors).unwrap().is_some());
        let swapped: Vec<usize> = h_colors.iter().map(|c| 1 - c).collect();
        assert!(find_colored_isomorphism(&m8.graph, ids, &h, &swapped).unwrap().is_none());
    }
}
