//! The relation δ, its closure δ*, and the (unique) square property.
//!
//! A chordless square *qualifies* for a relation when both of its
//! opposite-edge pairs are same-class. (S1) asks every adjacent cross-class
//! edge pair to span exactly one qualifying square; (S2) asks every chordless
//! square to qualify.

use serde::Serialize;

use crate::dsu::DisjointSets;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::relation::EdgeRelation;
use crate::square::{chordless_squares, square_completions, Square};

/// Unordered pairs `e < f` related by δ through opposite edges of a chordless
/// square or through adjacency without any spanning chordless square.
/// Reflexive pairs are implicit.
pub fn delta_pairs(g: &Graph) -> Vec<(EdgeId, EdgeId)> {
    let mut pairs = Vec::new();
    for sq in chordless_squares(g) {
        for (e, f) in sq.opposite_pairs(g) {
            pairs.push((e.min(f), e.max(f)));
        }
    }
    for x in 0..g.vertex_count() {
        let nbrs = g.neighbors(x);
        let inc = g.incident_edges(x);
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if square_completions(g, x, nbrs[i], nbrs[j]).is_empty() {
                    let (e, f) = (inc[i], inc[j]);
                    pairs.push((e.min(f), e.max(f)));
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// δ*, the transitive closure of δ, with classes numbered by smallest edge.
pub fn compute_delta(g: &Graph) -> EdgeRelation {
    let mut d = DisjointSets::new(g.edge_count());
    for (e, f) in delta_pairs(g) {
        d.union(e, f);
    }
    EdgeRelation::from_class_ids(g, d.labels()).expect("closure labels are contiguous")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum S1ViolationKind {
    NoQualifyingSquare,
    MultipleQualifyingSquares,
}

/// Adjacent edges from distinct classes that do not span exactly one
/// qualifying square.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S1Violation {
    pub e: EdgeId,
    pub f: EdgeId,
    pub kind: S1ViolationKind,
    /// The qualifying squares that were found (empty or at least two).
    pub witnesses: Vec<Square>,
}

fn qualifies(g: &Graph, r: &EdgeRelation, sq: &Square) -> bool {
    sq.opposite_pairs(g).iter().all(|&(a, b)| r.same_class(a, b))
}

/// Qualifying squares spanned by the adjacent edges `e`, `f`.
pub fn qualifying_squares(g: &Graph, r: &EdgeRelation, e: EdgeId, f: EdgeId) -> Vec<Square> {
    let Some(x) = g.common_vertex(e, f) else {
        return Vec::new();
    };
    let (y, z) = (g.other_end(e, x), g.other_end(f, x));
    let mut out: Vec<Square> = square_completions(g, x, y, z)
        .into_iter()
        .filter(|&u| {
            let yu = g.edge_between(y, u).unwrap();
            let uz = g.edge_between(u, z).unwrap();
            r.same_class(e, uz) && r.same_class(f, yu)
        })
        .map(|u| Square::new(x, y, u, z))
        .collect();
    out.sort_unstable();
    out
}

/// Adjacent edge pairs `(e, f)`, `e < f`, in lexicographic order.
pub(crate) fn adjacent_pairs(g: &Graph) -> Vec<(EdgeId, EdgeId)> {
    let mut pairs = Vec::new();
    for x in 0..g.vertex_count() {
        let inc = g.incident_edges(x);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                pairs.push((inc[i].min(inc[j]), inc[i].max(inc[j])));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// First (S1) violation in lexicographic `(e, f)` order, if any.
pub fn s1_violation(g: &Graph, r: &EdgeRelation) -> Option<S1Violation> {
    adjacent_pairs(g)
        .into_iter()
        .filter(|&(e, f)| !r.same_class(e, f))
        .find_map(|(e, f)| {
            let witnesses = qualifying_squares(g, r, e, f);
            let kind = match witnesses.len() {
                1 => return None,
                0 => S1ViolationKind::NoQualifyingSquare,
                _ => S1ViolationKind::MultipleQualifyingSquares,
            };
            Some(S1Violation { e, f, kind, witnesses })
        })
}

/// (S1): every adjacent cross-class pair spans a unique qualifying square.
pub fn satisfies_s1(g: &Graph, r: &EdgeRelation) -> (bool, Option<S1Violation>) {
    let v = s1_violation(g, r);
    (v.is_none(), v)
}

/// First chordless square that does not qualify, if any.
pub fn s2_violation(g: &Graph, r: &EdgeRelation) -> Option<Square> {
    chordless_squares(g).into_iter().find(|sq| !qualifies(g, r, sq))
}

/// (S2): every chordless square has same-class opposite edges.
pub fn satisfies_s2(g: &Graph, r: &EdgeRelation) -> (bool, Option<Square>) {
    let v = s2_violation(g, r);
    (v.is_none(), v)
}

/// First δ pair split across two classes, if any.
pub fn delta_containment_violation(g: &Graph, r: &EdgeRelation) -> Option<(EdgeId, EdgeId)> {
    delta_pairs(g).into_iter().find(|&(e, f)| !r.same_class(e, f))
}

/// The square property, evaluated as (S1) ∧ (S2) and independently as
/// `δ ⊆ R`. The two must agree; disagreement is reported as an internal
/// inconsistency.
pub fn has_square_property(g: &Graph, r: &EdgeRelation) -> Result<bool> {
    r.check_graph(g)?;
    let direct = s1_violation(g, r).is_none() && s2_violation(g, r).is_none();
    let via_delta = delta_containment_violation(g, r).is_none();
    if direct != via_delta {
        return Err(Error::InternalInconsistency(format!(
            "(S1 and S2) = {direct} but (delta contained) = {via_delta}"
        )));
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn delta_of_fixtures() {
        let c4 = fixtures::c4();
        let d = compute_delta(&c4);
        assert_eq!(d.class_count(), 2);
        // edges: 01, 03, 12, 23
        assert!(d.same_class(0, 3));
        assert!(d.same_class(1, 2));
        assert_eq!(compute_delta(&fixtures::k3()).class_count(), 1);
        let q3 = fixtures::q3();
        let d = compute_delta(&q3);
        assert_eq!(d.class_count(), 3);
        for cls in d.classes() {
            assert_eq!(cls.len(), 4);
            let (u, v) = q3.edge(cls[0]);
            let dim = u ^ v;
            assert!(cls.iter().all(|&e| {
                let (a, b) = q3.edge(e);
                a ^ b == dim
            }));
        }
        let m8 = fixtures::m8();
        assert!(compute_delta(&m8.graph).same_partition(m8.relation().unwrap()));
    }

    #[test]
    fn fig1_has_s1_but_not_s2() {
        let fig1 = fixtures::fig1();
        let r = fig1.relation().unwrap();
        assert_eq!(satisfies_s1(&fig1.graph, r), (true, None));
        let (ok, witness) = satisfies_s2(&fig1.graph, r);
        assert!(!ok);
        assert_eq!(
            witness.unwrap().display_with(&fig1.vertex_names).to_string(),
            "(1,2,3,4)"
        );
        assert_eq!(has_square_property(&fig1.graph, r), Ok(false));
    }

    #[test]
    fn m8_relation_has_s1() {
        let m8 = fixtures::m8();
        assert!(satisfies_s1(&m8.graph, m8.relation().unwrap()).0);
        let single = EdgeRelation::single_class(&m8.graph);
        assert_eq!(has_square_property(&m8.graph, &single), Ok(true));
    }

    #[test]
    fn vacuous_and_closure_cases() {
        let c4 = fixtures::c4();
        assert!(satisfies_s1(&c4, &EdgeRelation::single_class(&c4)).0);
        let d = compute_delta(&c4);
        assert!(satisfies_s2(&c4, &d).0);
        assert_eq!(has_square_property(&c4, &d), Ok(true));
        let q3 = fixtures::q3();
        assert!(satisfies_s2(&q3, &compute_delta(&q3)).0);
    }

    #[test]
    fn discrete_relation_violates_s1_without_squares() {
        let q3 = fixtures::q3();
        let v = s1_violation(&q3, &EdgeRelation::discrete(&q3)).unwrap();
        assert_eq!((v.e, v.f), (0, 1));
        assert_eq!(v.kind, S1ViolationKind::NoQualifyingSquare);
    }

    #[test]
    fn fig2_coarsening_loses_uniqueness() {
        let fig2 = fixtures::fig2();
        let q = fig2.witness().unwrap();
        let r = fig2.relation().unwrap();
        assert!(satisfies_s1(&fig2.graph, q).0);
        let v = s1_violation(&fig2.graph, r).unwrap();
        assert_eq!(v.kind, S1ViolationKind::MultipleQualifyingSquares);
        let e15 = fig2.edge("1", "5");
        let e56 = fig2.edge("5", "6");
        let named: Vec<String> = qualifying_squares(&fig2.graph, r, e15, e56)
            .iter()
            .map(|s| s.display_with(&fig2.vertex_names).to_string())
            .collect();
        // (1,5,6,2) and (1,5,6,4) in canonical orientation
        assert_eq!(named, vec!["(1,2,6,5)", "(1,4,6,5)"]);
    }
}
