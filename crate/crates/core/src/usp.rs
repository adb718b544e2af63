//! Certification of USP-relations: relations that admit a finer relation with
//! the unique square property (S1).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::relation::{ClassId, EdgeRelation};
use crate::square::square_completions;
use crate::square_property::{adjacent_pairs, compute_delta, qualifying_squares, s1_violation};

/// Outcome of [`certify_usp`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UspStatus {
    /// The relation itself satisfies (S1).
    HasUsp,
    /// A finer relation satisfying (S1), either supplied or found by search.
    UspByWitness(EdgeRelation),
    /// No finer relation satisfies (S1); the search space was exhausted.
    NotUsp,
    /// The search budget ran out before a decision.
    Unknown { explored: u64 },
}

impl UspStatus {
    pub fn is_certified(&self) -> bool {
        matches!(self, UspStatus::HasUsp | UspStatus::UspByWitness(_))
    }
}

/// Limits for the refinement search in [`certify_usp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UspBudget {
    /// Classes larger than this are not split by the search.
    pub max_class_edges: usize,
    /// Search nodes visited before giving up.
    pub max_nodes: u64,
}

impl Default for UspBudget {
    fn default() -> Self {
        Self {
            max_class_edges: 16,
            max_nodes: 1_000_000,
        }
    }
}

/// Decides whether `r` is a USP-relation.
///
/// Tries, in order: `r` itself, the supplied witness, the meet of `r` with
/// δ*, and finally an exhaustive search over all refinements of `r`.
/// `NotUsp` is returned only when that search is complete (or a necessary
/// condition fails), `Unknown` when the budget is exhausted.
pub fn certify_usp(
    g: &Graph,
    r: &EdgeRelation,
    witness: Option<&EdgeRelation>,
    budget: &UspBudget,
) -> Result<UspStatus> {
    r.check_graph(g)?;
    if let Some(w) = witness {
        w.check_graph(g)?;
        if !w.is_finer(r)? {
            return Err(Error::WitnessNotFiner);
        }
    }
    if s1_violation(g, r).is_none() {
        return Ok(UspStatus::HasUsp);
    }
    if let Some(w) = witness {
        if s1_violation(g, w).is_none() {
            return Ok(UspStatus::UspByWitness(w.clone()));
        }
    }
    // Any Q-qualifying square is R-qualifying, and R-cross pairs stay
    // Q-cross, so every R-cross pair needs an R-qualifying square.
    let pairs = adjacent_pairs(g);
    if pairs
        .iter()
        .any(|&(e, f)| !r.same_class(e, f) && qualifying_squares(g, r, e, f).is_empty())
    {
        return Ok(UspStatus::NotUsp);
    }
    let meet = r.meet(&compute_delta(g))?.canonical();
    if s1_violation(g, &meet).is_none() {
        return Ok(UspStatus::UspByWitness(meet));
    }
    if r.classes().iter().any(|c| c.len() > budget.max_class_edges) {
        return Ok(UspStatus::Unknown { explored: 0 });
    }
    Ok(RefinementSearch::new(g, r, &pairs, budget.max_nodes).run())
}

/// One (S1) constraint: the pair `(e, f)` with the squares it spans, as the
/// edge ids `(yu, uz)` closing each square `x-y-u-z` where `e = xy`, `f = xz`.
struct PairConstraint {
    e: EdgeId,
    f: EdgeId,
    closing: Vec<(EdgeId, EdgeId)>,
}

struct RefinementSearch<'a> {
    r: &'a EdgeRelation,
    order: Vec<EdgeId>,
    /// Constraints whose edges are all assigned once position `i` is.
    triggers: Vec<Vec<PairConstraint>>,
    label: Vec<usize>,
    used: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> RefinementSearch<'a> {
    fn new(g: &'a Graph, r: &'a EdgeRelation, pairs: &[(EdgeId, EdgeId)], max_nodes: u64) -> Self {
        let order = bfs_edge_order(g);
        let mut pos = vec![0; g.edge_count()];
        for (i, &e) in order.iter().enumerate() {
            pos[e] = i;
        }
        let mut triggers: Vec<Vec<PairConstraint>> = (0..order.len()).map(|_| Vec::new()).collect();
        for &(e, f) in pairs {
            let x = g.common_vertex(e, f).expect("adjacent pair");
            let (y, z) = (g.other_end(e, x), g.other_end(f, x));
            let closing: Vec<(EdgeId, EdgeId)> = square_completions(g, x, y, z)
                .into_iter()
                .map(|u| (g.edge_between(y, u).unwrap(), g.edge_between(u, z).unwrap()))
                .collect();
            let last = closing
                .iter()
                .flat_map(|&(a, b)| [pos[a], pos[b]])
                .chain([pos[e], pos[f]])
                .max()
                .unwrap();
            triggers[last].push(PairConstraint { e, f, closing });
        }
        Self {
            r,
            order,
            triggers,
            label: vec![usize::MAX; g.edge_count()],
            used: vec![0; r.class_count()],
            nodes: 0,
            max_nodes,
        }
    }

    fn same(&self, a: EdgeId, b: EdgeId) -> bool {
        self.r.same_class(a, b) && self.label[a] == self.label[b]
    }

    fn satisfied(&self, c: &PairConstraint) -> bool {
        if self.same(c.e, c.f) {
            return true;
        }
        let qualifying = c
            .closing
            .iter()
            .filter(|&&(yu, uz)| self.same(c.f, yu) && self.same(c.e, uz))
            .count();
        qualifying == 1
    }

    fn run(mut self) -> UspStatus {
        match self.assign(0) {
            Outcome::Found => {
                let ids: Vec<(ClassId, usize)> = (0..self.label.len())
                    .map(|e| (self.r.class_of(e), self.label[e]))
                    .collect();
                UspStatus::UspByWitness(relation_from_pairs(self.r, &ids))
            }
            Outcome::Exhausted => UspStatus::NotUsp,
            Outcome::OutOfBudget => UspStatus::Unknown { explored: self.nodes },
        }
    }

    fn assign(&mut self, i: usize) -> Outcome {
        if i == self.order.len() {
            return Outcome::Found;
        }
        let e = self.order[i];
        let c = self.r.class_of(e);
        let limit = self.used[c];
        for l in 0..=limit {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Outcome::OutOfBudget;
            }
            self.label[e] = l;
            if l == limit {
                self.used[c] += 1;
            }
            let ok = self.triggers[i].iter().all(|con| self.satisfied(con));
            if ok {
                match self.assign(i + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            if l == limit {
                self.used[c] -= 1;
            }
        }
        self.label[e] = usize::MAX;
        Outcome::Exhausted
    }
}

fn relation_from_pairs(r: &EdgeRelation, ids: &[(ClassId, usize)]) -> EdgeRelation {
    let mut seen = std::collections::HashMap::new();
    let class_of: Vec<usize> = ids
        .iter()
        .map(|key| {
            let next = seen.len();
            *seen.entry(*key).or_insert(next)
        })
        .collect();
    r.with_class_ids(class_of)
}

/// Edges in BFS order over the line graph, so that the edges of a square
/// tend to be assigned close together.
fn bfs_edge_order(g: &Graph) -> Vec<EdgeId> {
    let m = g.edge_count();
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for start in 0..m {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            order.push(e);
            let (u, v) = g.edge(e);
            for &f in g.incident_edges(u).iter().chain(g.incident_edges(v)) {
                if !seen[f] {
                    seen[f] = true;
                    queue.push_back(f);
                }
            }
        }
    }
    order
}

/// A relation certified to be a USP-relation, bundled with a finer relation
/// that satisfies (S1).
#[derive(Clone, Debug)]
pub struct CertifiedUsp<'g> {
    graph: &'g Graph,
    relation: EdgeRelation,
    witness: EdgeRelation,
}

impl<'g> CertifiedUsp<'g> {
    /// Runs [`certify_usp`]; anything short of a certificate is
    /// [`Error::NotCertifiedUsp`].
    pub fn certify(
        g: &'g Graph,
        r: &EdgeRelation,
        witness: Option<&EdgeRelation>,
        budget: &UspBudget,
    ) -> Result<Self> {
        match certify_usp(g, r, witness, budget)? {
            UspStatus::HasUsp => Ok(Self {
                graph: g,
                relation: r.clone(),
                witness: r.clone(),
            }),
            UspStatus::UspByWitness(w) => Ok(Self {
                graph: g,
                relation: r.clone(),
                witness: w,
            }),
            UspStatus::NotUsp | UspStatus::Unknown { .. } => Err(Error::NotCertifiedUsp),
        }
    }

    /// Certifies from an explicit witness only (no search).
    pub fn from_witness(g: &'g Graph, r: &EdgeRelation, witness: &EdgeRelation) -> Result<Self> {
        r.check_graph(g)?;
        witness.check_graph(g)?;
        if !witness.is_finer(r)? {
            return Err(Error::WitnessNotFiner);
        }
        if s1_violation(g, witness).is_some() {
            return Err(Error::NotCertifiedUsp);
        }
        Ok(Self {
            graph: g,
            relation: r.clone(),
            witness: witness.clone(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn relation(&self) -> &EdgeRelation {
        &self.relation
    }

    pub fn witness(&self) -> &EdgeRelation {
        &self.witness
    }

    /// Joins classes. Coarsenings of a USP-relation are USP-relations with
    /// the same witness.
    pub fn merge(&self, ids: &[ClassId]) -> Result<Self> {
        Ok(Self {
            graph: self.graph,
            relation: self.relation.merge_classes(ids)?,
            witness: self.witness.clone(),
        })
    }

    /// Groups classes by `group_of[class]`.
    pub fn coarsen(&self, group_of: &[usize]) -> Result<Self> {
        Ok(Self {
            graph: self.graph,
            relation: self.relation.coarsen(group_of)?,
            witness: self.witness.clone(),
        })
    }
}
