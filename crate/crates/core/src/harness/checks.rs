//! One evaluator per statement. Evaluators take an uncertified
//! `(graph, relation)` pair so they can also be run on relations that are not
//! USP-relations; certification is the caller's business.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{EdgeId, EdgeSubset, Graph, Vertex};
use crate::iso::{find_colored_isomorphism, ISO_VERTEX_LIMIT};
use crate::partition::{common_refinement, is_equitable, Equitability, VertexPartition};
use crate::product::{cartesian_product, product_criterion, split_as_product};
use crate::relation::{ClassId, EdgeRelation};
use crate::square_property::{adjacent_pairs, has_square_property, qualifying_squares};

/// Concrete data behind a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub message: String,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub classes: Vec<ClassId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { witness: Witness },
    Skipped { reason: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Verdict::Skipped {
            reason: reason.into(),
        }
    }
}

/// Shared inputs and precomputed partitions for the evaluators.
pub struct Ctx<'a> {
    pub g: &'a Graph,
    pub r: &'a EdgeRelation,
    names: Vec<String>,
    labels: Vec<String>,
    /// Components of `G_φ` per class.
    pub inside: Vec<VertexPartition>,
    /// Components of `G_φ̄` per class.
    pub outside: Vec<VertexPartition>,
    /// `P^R`.
    pub refinement: VertexPartition,
}

impl<'a> Ctx<'a> {
    /// Vertices and classes are shown by id.
    pub fn new(g: &'a Graph, r: &'a EdgeRelation) -> crate::Result<Self> {
        let names = (0..g.vertex_count()).map(|v| v.to_string()).collect();
        let labels = (0..r.class_count()).map(|c| format!("c{c}")).collect();
        Self::with_names(g, r, names, labels)
    }

    pub fn with_names(
        g: &'a Graph,
        r: &'a EdgeRelation,
        names: Vec<String>,
        labels: Vec<String>,
    ) -> crate::Result<Self> {
        r.check_graph(g)?;
        let inside = (0..r.class_count())
            .map(|c| g.connected_components(&r.class_subset(c)))
            .collect();
        let outside = (0..r.class_count())
            .map(|c| g.connected_components(&r.complement_subset(c)))
            .collect();
        Ok(Self {
            g,
            r,
            names,
            labels,
            inside,
            outside,
            refinement: common_refinement(g, r)?,
        })
    }

    pub fn k(&self) -> usize {
        self.r.class_count()
    }

    fn v(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    fn c(&self, c: ClassId) -> &str {
        &self.labels[c]
    }

    fn e(&self, e: EdgeId) -> String {
        let (u, v) = self.g.edge(e);
        format!("[{},{}]", self.v(u), self.v(v))
    }

    fn set(&self, vs: impl IntoIterator<Item = Vertex>) -> String {
        let names: Vec<&str> = vs.into_iter().map(|v| self.v(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    fn fail(&self, message: String, vertices: Vec<Vertex>, edges: Vec<EdgeId>, classes: Vec<ClassId>) -> Verdict {
        Verdict::Fail {
            witness: Witness {
                message,
                vertices,
                edges,
                classes,
            },
        }
    }

    /// φ-neighbors of `u`.
    fn n_class(&self, u: Vertex, phi: ClassId) -> Vec<Vertex> {
        self.g
            .neighbors(u)
            .iter()
            .zip(self.g.incident_edges(u))
            .filter(|(_, &e)| self.r.class_of(e) == phi)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Components of the spanning subgraph on the union of classes `phi`, `psi`.
    fn union_partition(&self, phi: ClassId, psi: ClassId) -> VertexPartition {
        self.g.connected_components(&self.r.union_subset(phi, psi))
    }

    /// Components of the spanning subgraph on all edges outside `phi ∪ psi`.
    fn union_complement_partition(&self, phi: ClassId, psi: ClassId) -> VertexPartition {
        self.g
            .connected_components(&self.r.union_subset(phi, psi).complement())
    }
}

fn block_set(p: &VertexPartition, x: Vertex) -> BTreeSet<Vertex> {
    p.block_containing(x).iter().copied().collect()
}

/// (S1 ∧ S2) and `δ ⊆ R` agree.
pub fn square_property_iff_delta(ctx: &Ctx) -> Verdict {
    match has_square_property(ctx.g, ctx.r) {
        Ok(_) => Verdict::Pass,
        Err(Error::InternalInconsistency(msg)) => ctx.fail(msg, vec![], vec![], vec![]),
        Err(e) => ctx.fail(e.to_string(), vec![], vec![], vec![]),
    }
}

/// Adjacent edges of distinct classes span at least one qualifying square.
pub fn observation_squares(ctx: &Ctx) -> Verdict {
    for (e, f) in adjacent_pairs(ctx.g) {
        if !ctx.r.same_class(e, f) && qualifying_squares(ctx.g, ctx.r, e, f).is_empty() {
            return ctx.fail(
                format!("{} and {} span no qualifying square", ctx.e(e), ctx.e(f)),
                vec![],
                vec![e, f],
                vec![ctx.r.class_of(e), ctx.r.class_of(f)],
            );
        }
    }
    Verdict::Pass
}

/// Every vertex meets every class.
pub fn incidence(ctx: &Ctx) -> Verdict {
    for u in 0..ctx.g.vertex_count() {
        let degrees = ctx.r.class_degrees(ctx.g, u);
        if let Some(phi) = degrees.iter().position(|&d| d == 0) {
            return ctx.fail(
                format!("vertex {} has no edge of class {}", ctx.v(u), ctx.c(phi)),
                vec![u],
                vec![],
                vec![phi],
            );
        }
    }
    Verdict::Pass
}

/// Endpoints of a φ-edge have equal ψ-degree for every ψ ≠ φ.
pub fn degree_bijection(ctx: &Ctx) -> Verdict {
    for (e, &(u, v)) in ctx.g.edges().iter().enumerate() {
        let phi = ctx.r.class_of(e);
        let (du, dv) = (ctx.r.class_degrees(ctx.g, u), ctx.r.class_degrees(ctx.g, v));
        if let Some(psi) = (0..ctx.k()).find(|&psi| psi != phi && du[psi] != dv[psi]) {
            return ctx.fail(
                format!(
                    "edge {} of class {}: {}-degrees {} and {}",
                    ctx.e(e),
                    ctx.c(phi),
                    ctx.c(psi),
                    du[psi],
                    dv[psi]
                ),
                vec![u, v],
                vec![e],
                vec![phi, psi],
            );
        }
    }
    Verdict::Pass
}

/// `|N_ψ(x) ∩ V(G_φ^w)|` is constant over each component `G_φ^v`.
pub fn neighbor_counts(ctx: &Ctx) -> Verdict {
    let n = ctx.g.vertex_count();
    for phi in 0..ctx.k() {
        let comps = &ctx.inside[phi];
        for psi in (0..ctx.k()).filter(|&psi| psi != phi) {
            let counts: Vec<Vec<usize>> = (0..n)
                .map(|x| {
                    let mut c = vec![0; comps.block_count()];
                    for y in ctx.n_class(x, psi) {
                        c[comps.block_of(y)] += 1;
                    }
                    c
                })
                .collect();
            for x in 0..n {
                let rep = comps.block_containing(x)[0];
                if let Some(w) = (0..comps.block_count()).find(|&w| counts[x][w] != counts[rep][w]) {
                    let target = comps.block(w)[0];
                    return ctx.fail(
                        format!(
                            "{} and {} lie in one {}-component but have {} and {} {}-neighbors in the {}-component of {}",
                            ctx.v(rep),
                            ctx.v(x),
                            ctx.c(phi),
                            counts[rep][w],
                            counts[x][w],
                            ctx.c(psi),
                            ctx.c(phi),
                            ctx.v(target)
                        ),
                        vec![rep, x, target],
                        vec![],
                        vec![phi, psi],
                    );
                }
            }
        }
    }
    Verdict::Pass
}

/// For two classes: every `G_φ`-component meets every `G_φ̄`-component.
pub fn nonempty_intersection(ctx: &Ctx) -> Verdict {
    if ctx.k() != 2 {
        return Verdict::skipped(format!("needs exactly two classes, found {}", ctx.k()));
    }
    let (inside, outside) = (&ctx.inside[0], &ctx.outside[0]);
    for a in inside.blocks() {
        for b in outside.blocks() {
            if !a.iter().any(|&v| outside.same_block(v, b[0])) {
                return ctx.fail(
                    format!(
                        "the {}-component of {} misses the complement component of {}",
                        ctx.c(0),
                        ctx.v(a[0]),
                        ctx.v(b[0])
                    ),
                    vec![a[0], b[0]],
                    vec![],
                    vec![0],
                );
            }
        }
    }
    Verdict::Pass
}

/// `V_R(x) ⊆ V_Q(x)` for `Q` finer than `R`.
pub fn monotonicity(g: &Graph, q: &EdgeRelation, r: &EdgeRelation) -> Verdict {
    match q.is_finer(r) {
        Ok(true) => {}
        Ok(false) => return Verdict::skipped("first relation is not finer"),
        Err(e) => return Verdict::skipped(e.to_string()),
    }
    let (pq, pr) = match (common_refinement(g, q), common_refinement(g, r)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return Verdict::skipped("relation does not match the graph"),
    };
    for x in 0..g.vertex_count() {
        if let Some(&y) = pr.block_containing(x).iter().find(|&&y| !pq.same_block(x, y)) {
            return Verdict::Fail {
                witness: Witness {
                    message: format!("{y} is in V_R({x}) but not in V_Q({x})"),
                    vertices: vec![x, y],
                    edges: vec![],
                    classes: vec![],
                },
            };
        }
    }
    Verdict::Pass
}

/// `P^R_φ̄` is an equitable partition of `G_φ` for every class.
pub fn complement_equitable(ctx: &Ctx) -> Verdict {
    for phi in 0..ctx.k() {
        let sub = ctx.g.spanning_subgraph(&ctx.r.class_subset(phi));
        match is_equitable(&sub, &ctx.outside[phi]) {
            Ok(Equitability::Equitable(_)) => {}
            Ok(Equitability::Violated(v)) => {
                return ctx.fail(
                    format!(
                        "in G_{}, {} has {} and {} has {} neighbors in the block of {}",
                        ctx.c(phi),
                        ctx.v(v.x),
                        v.x_count,
                        ctx.v(v.other),
                        v.other_count,
                        ctx.v(ctx.outside[phi].block(v.b)[0])
                    ),
                    vec![v.x, v.other],
                    vec![],
                    vec![phi],
                )
            }
            Err(e) => return ctx.fail(e.to_string(), vec![], vec![], vec![phi]),
        }
    }
    Verdict::Pass
}

/// Both parts of the neighborhood-cut lemma, for every class and pair of
/// `P^R` blocks.
pub fn neighborhood_cut(ctx: &Ctx) -> Verdict {
    let p = &ctx.refinement;
    for phi in 0..ctx.k() {
        for x in 0..ctx.g.vertex_count() {
            let nx = ctx.n_class(x, phi);
            for yb in 0..p.block_count() {
                let y = p.block(yb)[0];
                let hit: Vec<Vertex> = nx.iter().copied().filter(|&z| p.block_of(z) == yb).collect();
                let all = p
                    .block_containing(x)
                    .iter()
                    .all(|&u| ctx.n_class(u, phi).iter().any(|&z| p.block_of(z) == yb));
                if !hit.is_empty() != all {
                    return ctx.fail(
                        format!(
                            "N_{}({}) meets V_R({}) = {}, but not for every vertex of V_R({})",
                            ctx.c(phi),
                            ctx.v(x),
                            ctx.v(y),
                            !hit.is_empty(),
                            ctx.v(x)
                        ),
                        vec![x, y],
                        vec![],
                        vec![phi],
                    );
                }
                if !hit.is_empty() {
                    let via_component: Vec<Vertex> = nx
                        .iter()
                        .copied()
                        .filter(|&z| ctx.outside[phi].same_block(z, y))
                        .collect();
                    if hit != via_component {
                        return ctx.fail(
                            format!(
                                "N_{}({}) ∩ V_R({}) = {} differs from its intersection with the complement component, {}",
                                ctx.c(phi),
                                ctx.v(x),
                                ctx.v(y),
                                ctx.set(hit.iter().copied()),
                                ctx.set(via_component.iter().copied())
                            ),
                            vec![x, y],
                            vec![],
                            vec![phi],
                        );
                    }
                }
            }
        }
    }
    Verdict::Pass
}

/// `P^R` is equitable on `G`.
pub fn equitable_partition(ctx: &Ctx) -> Verdict {
    match is_equitable(ctx.g, &ctx.refinement) {
        Ok(Equitability::Equitable(_)) => Verdict::Pass,
        Ok(Equitability::Violated(v)) => ctx.fail(
            format!(
                "{} and {} share a block but have {} and {} neighbors in the block of {}",
                ctx.v(v.x),
                ctx.v(v.other),
                v.x_count,
                v.other_count,
                ctx.v(ctx.refinement.block(v.b)[0])
            ),
            vec![v.x, v.other],
            vec![],
            vec![],
        ),
        Err(e) => ctx.fail(e.to_string(), vec![], vec![], vec![]),
    }
}

/// For each class φ: the criterion for `{φ, φ̄}` holds iff `(G, {φ, φ̄})` is
/// color-isomorphic to `G_φ^0 □ G_φ̄^0` with its product relation; when it
/// holds, the explicit map must also be an isomorphism.
pub fn product_relation_theorem(ctx: &Ctx) -> Verdict {
    let n = ctx.g.vertex_count();
    if n > ISO_VERTEX_LIMIT {
        return Verdict::skipped(format!("more than {ISO_VERTEX_LIMIT} vertices"));
    }
    if ctx.k() < 2 {
        return Verdict::skipped("needs at least two classes");
    }
    for phi in 0..ctx.k() {
        let two = two_class(ctx.r, &ctx.r.class_subset(phi));
        let criterion = match product_criterion(ctx.g, &two, 0) {
            Ok(v) => v.is_none(),
            Err(e) => return ctx.fail(e.to_string(), vec![], vec![], vec![phi]),
        };
        let inside = ctx.r.class_subset(phi);
        let (a, _) = ctx.g.component_graph(&inside, 0);
        let (b, _) = ctx.g.component_graph(&inside.complement(), 0);
        if a.vertex_count() * b.vertex_count() != n {
            if criterion {
                return ctx.fail(
                    format!("class {}: criterion holds but the factor sizes do not multiply to {n}", ctx.c(phi)),
                    vec![],
                    vec![],
                    vec![phi],
                );
            }
            continue;
        }
        let prod = cartesian_product(&a, &b);
        let nb = b.vertex_count();
        let prod_colors: Vec<usize> = prod
            .edges()
            .iter()
            .map(|&(u, v)| usize::from(u / nb == v / nb))
            .collect();
        let g_colors: Vec<usize> = (0..ctx.g.edge_count()).map(|e| usize::from(!inside.contains(e))).collect();
        let iso = match find_colored_isomorphism(ctx.g, &g_colors, &prod, &prod_colors) {
            Ok(m) => m.is_some(),
            Err(e) => return Verdict::skipped(e.to_string()),
        };
        if criterion != iso {
            return ctx.fail(
                format!(
                    "class {}: intersection criterion {} but product isomorphism {}",
                    ctx.c(phi),
                    criterion,
                    iso
                ),
                vec![],
                vec![],
                vec![phi],
            );
        }
        if criterion {
            if let Err(e) = split_as_product(ctx.g, &two, 0) {
                return ctx.fail(e.to_string(), vec![], vec![], vec![phi]);
            }
        }
    }
    Verdict::Pass
}

/// `{χ, E \ χ}` as a relation with χ as class 0 (or a single class when χ
/// is everything).
fn two_class(r: &EdgeRelation, chi: &EdgeSubset) -> EdgeRelation {
    let ids: Vec<usize> = (0..r.edge_count()).map(|e| usize::from(!chi.contains(e))).collect();
    r.with_class_ids(ids)
}

/// Whether the edge set χ "belongs to a factor": `{χ, E \ χ}` passes the
/// product criterion.
pub fn belongs_to_factor(g: &Graph, r: &EdgeRelation, chi: &EdgeSubset) -> bool {
    if chi.count() == chi.len() {
        return true;
    }
    let two = two_class(r, chi);
    matches!(product_criterion(g, &two, 0), Ok(None))
}

/// `V(G_{φ∪ψ}^x)` is the union of the ψ-components over `V(G_φ^x)`, and
/// symmetrically.
pub fn union_components(ctx: &Ctx, phi: ClassId, psi: ClassId) -> Verdict {
    let union = ctx.union_partition(phi, psi);
    for x in 0..ctx.g.vertex_count() {
        let target = block_set(&union, x);
        for (a, b) in [(phi, psi), (psi, phi)] {
            let got: BTreeSet<Vertex> = ctx.inside[a]
                .block_containing(x)
                .iter()
                .flat_map(|&y| ctx.inside[b].block_containing(y).iter().copied())
                .collect();
            if got != target {
                return ctx.fail(
                    format!(
                        "at {}: union over {}-component of {}-components is {}, but the {}∪{}-component is {}",
                        ctx.v(x),
                        ctx.c(a),
                        ctx.c(b),
                        ctx.set(got.iter().copied()),
                        ctx.c(phi),
                        ctx.c(psi),
                        ctx.set(target.iter().copied())
                    ),
                    vec![x],
                    vec![],
                    vec![phi, psi],
                );
            }
        }
    }
    Verdict::Pass
}

/// `V(G_φ̄^x) ∩ V(G_ψ̄^x) = V(G_{φ∪ψ}‾^x)` iff
/// `V(G_φ^x) ∩ V(G_φ̄^x) ⊆ V(G_{φ∪ψ}‾^x)`, at every `x`.
pub fn intersection_criterion(ctx: &Ctx, phi: ClassId, psi: ClassId) -> Verdict {
    let joint = ctx.union_complement_partition(phi, psi);
    for x in 0..ctx.g.vertex_count() {
        let lhs_set: BTreeSet<Vertex> = block_set(&ctx.outside[phi], x)
            .intersection(&block_set(&ctx.outside[psi], x))
            .copied()
            .collect();
        let target = block_set(&joint, x);
        let lhs = lhs_set == target;
        let core: BTreeSet<Vertex> = block_set(&ctx.inside[phi], x)
            .intersection(&block_set(&ctx.outside[phi], x))
            .copied()
            .collect();
        let rhs = core.is_subset(&target);
        if lhs != rhs {
            return ctx.fail(
                format!(
                    "at {}: intersection equality is {} but the subset condition is {}",
                    ctx.v(x),
                    lhs,
                    rhs
                ),
                vec![x],
                vec![],
                vec![phi, psi],
            );
        }
    }
    Verdict::Pass
}

/// The three clauses about component containment for classes `φ`, `ψ`.
pub fn subset_props(ctx: &Ctx, phi: ClassId, psi: ClassId) -> Verdict {
    let n = ctx.g.vertex_count();
    let all: BTreeSet<Vertex> = (0..n).collect();
    let joint = ctx.union_complement_partition(phi, psi);
    for x in 0..n {
        let gphi = block_set(&ctx.inside[phi], x);
        let gpsi = block_set(&ctx.inside[psi], x);
        // (1)
        if gphi.is_subset(&gpsi) {
            if let Some(&y) = gpsi.iter().find(|&&y| !block_set(&ctx.inside[phi], y).is_subset(&gpsi)) {
                return ctx.fail(
                    format!(
                        "clause (1) at {}: the {}-component of {} leaves the {}-component of {}",
                        ctx.v(x),
                        ctx.c(phi),
                        ctx.v(y),
                        ctx.c(psi),
                        ctx.v(x)
                    ),
                    vec![x, y],
                    vec![],
                    vec![phi, psi],
                );
            }
        }
        // (2)
        let gbar = block_set(&ctx.outside[phi], x);
        if gphi.is_subset(&gbar) && gbar != all {
            return ctx.fail(
                format!(
                    "clause (2) at {}: G_{} component inside the complement component, which is not all of V",
                    ctx.v(x),
                    ctx.c(phi)
                ),
                vec![x],
                vec![],
                vec![phi],
            );
        }
        // (3)
        if gbar == all {
            for y in 0..n {
                let yphi = block_set(&ctx.inside[phi], y);
                let ybar = block_set(&ctx.outside[phi], y);
                let yjoint = block_set(&joint, y);
                let core: BTreeSet<Vertex> = yphi.intersection(&ybar).copied().collect();
                if core.is_subset(&yjoint) != yphi.is_subset(&yjoint) {
                    return ctx.fail(
                        format!("clause (3) at {}", ctx.v(y)),
                        vec![x, y],
                        vec![],
                        vec![phi, psi],
                    );
                }
            }
        }
    }
    Verdict::Pass
}

/// The three clauses about joining `φ` and `ψ`. "Belongs to a factor" is read
/// as [`belongs_to_factor`].
pub fn join_corollary(ctx: &Ctx, phi: ClassId, psi: ClassId) -> Verdict {
    let s = match ctx.r.merge_classes(&[phi, psi]) {
        Ok(s) => s,
        Err(e) => return Verdict::skipped(e.to_string()),
    };
    let ps = match common_refinement(ctx.g, &s) {
        Ok(p) => p,
        Err(e) => return ctx.fail(e.to_string(), vec![], vec![], vec![phi, psi]),
    };
    let same = ps == ctx.refinement;
    let n = ctx.g.vertex_count();
    let factor = |chi: &EdgeSubset| belongs_to_factor(ctx.g, ctx.r, chi);
    let fphi = factor(&ctx.r.class_subset(phi));
    let fpsi = factor(&ctx.r.class_subset(psi));
    // (1)
    if (fphi || fpsi) && !same {
        return ctx.fail(
            format!(
                "clause (1): {} or {} belongs to a factor but joining them changes the partition",
                ctx.c(phi),
                ctx.c(psi)
            ),
            vec![],
            vec![],
            vec![phi, psi],
        );
    }
    // (2)
    let hypothesis = (0..n).find(|&x| block_set(&ctx.inside[phi], x).is_subset(&block_set(&ctx.outside[phi], x)));
    if let Some(x) = hypothesis {
        let joint = ctx.union_complement_partition(phi, psi);
        let condition = (0..n).all(|y| block_set(&ctx.inside[phi], y).is_subset(&block_set(&joint, y)));
        if same != condition {
            return ctx.fail(
                format!(
                    "clause (2) (hypothesis at {}): partitions equal = {}, containment for all y = {}",
                    ctx.v(x),
                    same,
                    condition
                ),
                vec![x],
                vec![],
                vec![phi, psi],
            );
        }
    }
    // (3)
    if same {
        let funion = factor(&ctx.r.union_subset(phi, psi));
        if funion != (fphi && fpsi) {
            return ctx.fail(
                format!(
                    "clause (3): union belongs to a factor = {}, both classes do = {}",
                    funion,
                    fphi && fpsi
                ),
                vec![],
                vec![],
                vec![phi, psi],
            );
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::square_property::compute_delta;

    fn ctx_of(inst: &crate::Instance) -> Ctx<'_> {
        Ctx::new(&inst.graph, inst.relation().unwrap()).unwrap()
    }

    #[test]
    fn fixtures_pass_single_checks() {
        for inst in [fixtures::m8(), fixtures::prism(), fixtures::fig1()] {
            let ctx = ctx_of(&inst);
            for (name, v) in [
                ("incidence", incidence(&ctx)),
                ("bijection", degree_bijection(&ctx)),
                ("neighbors", neighbor_counts(&ctx)),
                ("nonempty", nonempty_intersection(&ctx)),
                ("observation", observation_squares(&ctx)),
                ("equitable", equitable_partition(&ctx)),
                ("complement", complement_equitable(&ctx)),
                ("cut", neighborhood_cut(&ctx)),
                ("prodrel", product_relation_theorem(&ctx)),
                ("union", union_components(&ctx, 0, 1)),
                ("intersection", intersection_criterion(&ctx, 0, 1)),
                ("subsets", subset_props(&ctx, 1, 0)),
                ("join", join_corollary(&ctx, 0, 1)),
            ] {
                assert!(v.is_pass(), "{} {name}: {v:?}", inst.name);
            }
        }
    }

    #[test]
    fn q3_class_pairs() {
        let q3 = fixtures::q3();
        let d = compute_delta(&q3);
        let ctx = Ctx::new(&q3, &d).unwrap();
        let union = ctx.union_partition(0, 1);
        assert_eq!(union.block_count(), 2);
        assert!(union.blocks().iter().all(|b| b.len() == 4));
        for phi in 0..3 {
            for psi in (0..3).filter(|&p| p != phi) {
                assert!(union_components(&ctx, phi, psi).is_pass());
                assert!(intersection_criterion(&ctx, phi, psi).is_pass());
                assert!(subset_props(&ctx, phi, psi).is_pass());
                assert!(join_corollary(&ctx, phi, psi).is_pass());
            }
        }
        assert!(monotonicity(&q3, &d, &d.merge_classes(&[0, 1]).unwrap()).is_pass());
    }

    #[test]
    fn monotonicity_examples() {
        let m8 = fixtures::m8();
        let r = m8.relation().unwrap();
        assert!(monotonicity(&m8.graph, r, r).is_pass());
        assert!(monotonicity(&m8.graph, r, &EdgeRelation::single_class(&m8.graph)).is_pass());
    }

    #[test]
    fn checks_have_teeth() {
        // a star: the leaves miss every class but their own
        let star = fixtures::star(3);
        let r = EdgeRelation::discrete(&star);
        let ctx = Ctx::new(&star, &r).unwrap();
        assert!(incidence(&ctx).is_fail());
        assert!(observation_squares(&ctx).is_fail());
        // a path with classes split unevenly
        let p4 = fixtures::path(4);
        let r = EdgeRelation::from_labels(&p4, &[0, 1, 0]).unwrap();
        let ctx = Ctx::new(&p4, &r).unwrap();
        assert!(degree_bijection(&ctx).is_fail());
    }
}
