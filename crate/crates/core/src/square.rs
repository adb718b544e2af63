//! Chordless squares (induced 4-cycles).

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// An induced 4-cycle `a-b-c-d-a`, stored in canonical form: the
/// lexicographically least of its eight rotations and reflections, i.e. `a` is
/// the smallest vertex and `b < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Square([Vertex; 4]);

impl Square {
    /// Canonicalizes the cycle `a-b-c-d-a`. Does not check that it is a
    /// chordless square of any particular graph.
    pub fn new(a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> Self {
        let cyc = [a, b, c, d];
        let mut best = cyc;
        for start in 0..4 {
            let fwd = [cyc[start], cyc[(start + 1) % 4], cyc[(start + 2) % 4], cyc[(start + 3) % 4]];
            let rev = [fwd[0], fwd[3], fwd[2], fwd[1]];
            best = best.min(fwd).min(rev);
        }
        Self(best)
    }

    pub fn vertices(&self) -> [Vertex; 4] {
        self.0
    }

    /// Edge ids of `ab, bc, cd, da`.
    pub fn edges(&self, g: &Graph) -> [EdgeId; 4] {
        let [a, b, c, d] = self.0;
        [(a, b), (b, c), (c, d), (d, a)].map(|(u, v)| g.edge_between(u, v).expect("square edge"))
    }

    /// The two pairs of opposite edges, `{ab, cd}` and `{bc, da}`.
    pub fn opposite_pairs(&self, g: &Graph) -> [(EdgeId, EdgeId); 2] {
        let [ab, bc, cd, da] = self.edges(g);
        [(ab, cd), (bc, da)]
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Maps vertex ids through `names` (e.g. to the labels of a figure).
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        NamedSquare { sq: self, names }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

struct NamedSquare<'a> {
    sq: &'a Square,
    names: &'a [String],
}

impl fmt::Display for NamedSquare<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.sq.0.map(|v| self.names[v].as_str());
        write!(f, "({a},{b},{c},{d})")
    }
}

/// Every chordless square of `g` exactly once, in lexicographic order.
pub fn chordless_squares(g: &Graph) -> Vec<Square> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        let nbrs = g.neighbors(a);
        for (i, &b) in nbrs.iter().enumerate() {
            if b < a {
                continue;
            }
            for &d in &nbrs[i + 1..] {
                if g.has_edge(b, d) {
                    continue;
                }
                for &c in g.neighbors(b) {
                    if c > a && c != d && g.has_edge(c, d) && !g.has_edge(a, c) {
                        out.push(Square([a, b, c, d]));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// The fourth vertices `u` of the chordless squares `x-y-u-z` through the
/// path `y-x-z`.
pub(crate) fn square_completions(g: &Graph, x: Vertex, y: Vertex, z: Vertex) -> Vec<Vertex> {
    if g.has_edge(y, z) {
        return Vec::new();
    }
    let (ny, nz) = (g.neighbors(y), g.neighbors(z));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < ny.len() && j < nz.len() {
        match ny[i].cmp(&nz[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let u = ny[i];
                if u != x && !g.has_edge(x, u) {
                    out.push(u);
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// All chordless squares containing both edges `e` and `f`, which must share
/// exactly one endpoint.
pub fn squares_spanned_by(g: &Graph, e: EdgeId, f: EdgeId) -> Result<Vec<Square>> {
    for id in [e, f] {
        if id >= g.edge_count() {
            return Err(Error::EdgeOutOfRange(id));
        }
    }
    let x = g.common_vertex(e, f).ok_or(Error::NotAdjacent(e, f))?;
    let (y, z) = (g.other_end(e, x), g.other_end(f, x));
    let mut out: Vec<Square> = square_completions(g, x, y, z)
        .into_iter()
        .map(|u| Square::new(x, y, u, z))
        .collect();
    out.sort_unstable();
    Ok(out)
}
