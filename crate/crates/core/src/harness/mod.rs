//! Executable checks of the structural statements about USP-relations, run
//! one at a time or as a batch that produces a [`Report`].
//!
//! The `check_*` functions take a [`CertifiedUsp`], so the USP precondition
//! is enforced by the type. [`run_all`] also runs on uncertified relations;
//! failures there are expected data, while a failure on a certified relation
//! is flagged as a bug.

pub mod checks;
pub mod generate;
pub mod report;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::{verify_loopless_decomposition, verify_quotient_decomposition, verify_weighted_decomposition};
use crate::relation::{ClassId, EdgeRelation};
use crate::square_property::{s1_violation, s2_violation};
use crate::usp::{certify_usp, CertifiedUsp, UspBudget, UspStatus};

pub use checks::{Ctx, Verdict, Witness};
pub use report::{Entry, Report, SquarePropertySummary};

/// A registered statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Statement {
    pub id: &'static str,
    pub title: &'static str,
}

/// Every statement in report order.
pub const STATEMENTS: &[Statement] = &[
    Statement { id: "square-property-iff-delta", title: "square property holds iff the relation contains delta" },
    Statement { id: "observation-squares", title: "cross-class adjacent edges span a qualifying square" },
    Statement { id: "lemma-incidence", title: "every vertex meets every class" },
    Statement { id: "lemma-degree-bijection", title: "endpoints of a class edge have equal degree in every other class" },
    Statement { id: "lemma-nonempty-intersection", title: "two-class relations: components of G_phi and its complement meet" },
    Statement { id: "lemma-monotonicity", title: "finer relations have larger blocks V_Q(x)" },
    Statement { id: "lemma-neighbors", title: "psi-neighbor counts into a phi-component are constant on phi-components" },
    Statement { id: "corollary-complement-equitable", title: "complement components are equitable in G_phi" },
    Statement { id: "lemma-neighborhood-cut", title: "phi-neighborhoods cut blocks of P^R uniformly" },
    Statement { id: "theorem-equitable-partition", title: "P^R is equitable" },
    Statement { id: "theorem-quotient-product", title: "G/P^R is the product of the factor quotients" },
    Statement { id: "corollary-loopless-product", title: "loopless quotient decomposition" },
    Statement { id: "corollary-weighted-product", title: "weighted quotient decomposition" },
    Statement { id: "theorem-product-relation", title: "intersection criterion characterises product relations" },
    Statement { id: "proposition-union-components", title: "components of a union of two classes" },
    Statement { id: "proposition-intersection-criterion", title: "intersection of complement components" },
    Statement { id: "proposition-subsets", title: "containment between class components" },
    Statement { id: "corollary-join", title: "joining two classes" },
];

pub fn statement(id: &str) -> Option<&'static Statement> {
    STATEMENTS.iter().find(|s| s.id == id)
}

pub fn check_incidence(c: &CertifiedUsp) -> Result<Verdict> {
    Ok(checks::incidence(&ctx(c)?))
}

pub fn check_degree_bijection(c: &CertifiedUsp) -> Result<Verdict> {
    Ok(checks::degree_bijection(&ctx(c)?))
}

pub fn check_neighbor_counts(c: &CertifiedUsp) -> Result<Verdict> {
    Ok(checks::neighbor_counts(&ctx(c)?))
}

pub fn check_nonempty_intersection(c: &CertifiedUsp) -> Result<Verdict> {
    let k = c.relation().class_count();
    if k != 2 {
        return Err(Error::NotTwoClasses(k));
    }
    Ok(checks::nonempty_intersection(&ctx(c)?))
}

/// `q` must be finer than `r`.
pub fn check_monotonicity(g: &Graph, q: &EdgeRelation, r: &EdgeRelation) -> Result<Verdict> {
    q.check_graph(g)?;
    r.check_graph(g)?;
    if !q.is_finer(r)? {
        return Err(Error::NotFiner);
    }
    Ok(checks::monotonicity(g, q, r))
}

fn check_pair<'a>(c: &'a CertifiedUsp, phi: ClassId, psi: ClassId) -> Result<Ctx<'a>> {
    c.relation().check_class(phi)?;
    c.relation().check_class(psi)?;
    if phi == psi {
        return Err(Error::InvalidRelation("the two classes must differ".into()));
    }
    ctx(c)
}

pub fn check_union_components(c: &CertifiedUsp, phi: ClassId, psi: ClassId) -> Result<Verdict> {
    Ok(checks::union_components(&check_pair(c, phi, psi)?, phi, psi))
}

pub fn check_intersection_criterion(c: &CertifiedUsp, phi: ClassId, psi: ClassId) -> Result<Verdict> {
    Ok(checks::intersection_criterion(&check_pair(c, phi, psi)?, phi, psi))
}

pub fn check_subset_props(c: &CertifiedUsp, phi: ClassId, psi: ClassId) -> Result<Verdict> {
    Ok(checks::subset_props(&check_pair(c, phi, psi)?, phi, psi))
}

pub fn check_join_corollary(c: &CertifiedUsp, phi: ClassId, psi: ClassId) -> Result<Verdict> {
    Ok(checks::join_corollary(&check_pair(c, phi, psi)?, phi, psi))
}

fn ctx<'a>(c: &'a CertifiedUsp) -> Result<Ctx<'a>> {
    Ctx::new(c.graph(), c.relation())
}

/// Settings for [`run_all`].
#[derive(Clone, Debug, Default)]
pub struct HarnessOptions {
    pub budget: UspBudget,
    /// Recorded in the report when the instance came from a generator.
    pub seed: Option<u64>,
}

/// Input to [`run_all`]. Names default to ids.
#[derive(Clone, Debug)]
pub struct HarnessInput<'a> {
    pub name: String,
    pub graph: &'a Graph,
    pub relation: &'a EdgeRelation,
    pub witness: Option<&'a EdgeRelation>,
    pub vertex_names: Option<Vec<String>>,
    pub class_labels: Option<Vec<String>>,
}

impl<'a> HarnessInput<'a> {
    pub fn new(name: &str, graph: &'a Graph, relation: &'a EdgeRelation) -> Self {
        Self {
            name: name.to_string(),
            graph,
            relation,
            witness: None,
            vertex_names: None,
            class_labels: None,
        }
    }

    pub fn from_instance(inst: &'a crate::Instance) -> Result<Self> {
        let relation = inst
            .relation()
            .ok_or_else(|| Error::InvalidRelation("instance has no edge classes".into()))?;
        Ok(Self {
            name: inst.name.clone(),
            graph: &inst.graph,
            relation,
            witness: inst.witness(),
            vertex_names: Some(inst.vertex_names.clone()),
            class_labels: Some(inst.class_labels()),
        })
    }
}

fn ordered_pairs(k: usize) -> impl Iterator<Item = (ClassId, ClassId)> {
    (0..k).flat_map(move |a| (0..k).filter(move |&b| b != a).map(move |b| (a, b)))
}

/// First non-pass verdict over all ordered class pairs, or pass.
fn over_pairs(ctx: &Ctx, f: impl Fn(&Ctx, ClassId, ClassId) -> Verdict) -> Verdict {
    if ctx.k() < 2 {
        return Verdict::skipped("needs at least two classes");
    }
    for (a, b) in ordered_pairs(ctx.k()) {
        let v = f(ctx, a, b);
        if !v.is_pass() {
            return v;
        }
    }
    Verdict::Pass
}

/// Runs every registered statement. Errors only on malformed input (a
/// relation or witness that does not fit the graph).
pub fn run_all(input: &HarnessInput, options: &HarnessOptions) -> Result<Report> {
    let (g, r) = (input.graph, input.relation);
    let names = input
        .vertex_names
        .clone()
        .unwrap_or_else(|| (0..g.vertex_count()).map(|v| v.to_string()).collect());
    let labels = input
        .class_labels
        .clone()
        .unwrap_or_else(|| (0..r.class_count()).map(|c| format!("c{c}")).collect());
    let ctx = Ctx::with_names(g, r, names.clone(), labels)?;

    let status = match certify_usp(g, r, input.witness, &options.budget) {
        Ok(s) => s,
        Err(Error::WitnessNotFiner) => certify_usp(g, r, None, &options.budget)?,
        Err(e) => return Err(e),
    };
    let certified = match &status {
        UspStatus::HasUsp => CertifiedUsp::from_witness(g, r, r).ok(),
        UspStatus::UspByWitness(w) => CertifiedUsp::from_witness(g, r, w).ok(),
        _ => None,
    };

    let mut verdicts: BTreeMap<&str, Verdict> = BTreeMap::new();
    verdicts.insert("square-property-iff-delta", checks::square_property_iff_delta(&ctx));
    verdicts.insert("observation-squares", checks::observation_squares(&ctx));
    verdicts.insert("lemma-incidence", checks::incidence(&ctx));
    verdicts.insert("lemma-degree-bijection", checks::degree_bijection(&ctx));
    verdicts.insert("lemma-nonempty-intersection", checks::nonempty_intersection(&ctx));
    verdicts.insert("lemma-monotonicity", monotonicity_batch(g, r, input.witness, &status));
    verdicts.insert("lemma-neighbors", checks::neighbor_counts(&ctx));
    verdicts.insert("corollary-complement-equitable", checks::complement_equitable(&ctx));
    verdicts.insert("lemma-neighborhood-cut", checks::neighborhood_cut(&ctx));
    verdicts.insert("theorem-equitable-partition", checks::equitable_partition(&ctx));
    let (quotient, loopless, weighted) = decomposition_checks(certified.as_ref());
    verdicts.insert("theorem-quotient-product", quotient);
    verdicts.insert("corollary-loopless-product", loopless);
    verdicts.insert("corollary-weighted-product", weighted);
    verdicts.insert("theorem-product-relation", checks::product_relation_theorem(&ctx));
    verdicts.insert("proposition-union-components", over_pairs(&ctx, checks::union_components));
    verdicts.insert("proposition-intersection-criterion", over_pairs(&ctx, checks::intersection_criterion));
    verdicts.insert("proposition-subsets", over_pairs(&ctx, checks::subset_props));
    verdicts.insert("corollary-join", over_pairs(&ctx, checks::join_corollary));

    let entries = STATEMENTS
        .iter()
        .map(|s| Entry {
            id: s.id,
            title: s.title,
            verdict: verdicts.remove(s.id).expect("every statement is evaluated"),
        })
        .collect();

    let mut metadata = BTreeMap::new();
    metadata.insert(
        "factor-reading".to_string(),
        "a class set belongs to a factor when {chi, E - chi} passes the product criterion".to_string(),
    );
    metadata.insert("vertices".to_string(), g.vertex_count().to_string());
    metadata.insert("edges".to_string(), g.edge_count().to_string());
    metadata.insert("classes".to_string(), r.class_count().to_string());

    Ok(Report {
        instance: input.name.clone(),
        seed: options.seed,
        usp: report::usp_label(&status).to_string(),
        certified: certified.is_some(),
        square_property: square_property_summary(g, r, &names),
        metadata,
        entries,
    })
}

pub fn square_property_summary(g: &Graph, r: &EdgeRelation, names: &[String]) -> SquarePropertySummary {
    if let Some(sq) = s2_violation(g, r) {
        return SquarePropertySummary {
            holds: false,
            witness: Some(format!("square {}", sq.display_with(names))),
        };
    }
    if let Some(v) = s1_violation(g, r) {
        let (a, b) = g.edge(v.e);
        let (c, d) = g.edge(v.f);
        return SquarePropertySummary {
            holds: false,
            witness: Some(format!(
                "edges [{},{}] and [{},{}] span {} qualifying squares",
                names[a],
                names[b],
                names[c],
                names[d],
                v.witnesses.len()
            )),
        };
    }
    SquarePropertySummary {
        holds: true,
        witness: None,
    }
}

/// Pairs `(finer, coarser)`: the relation against itself, every merge of two
/// classes, the single class, and the witness when there is one.
fn monotonicity_batch(
    g: &Graph,
    r: &EdgeRelation,
    witness: Option<&EdgeRelation>,
    status: &UspStatus,
) -> Verdict {
    let mut pairs = vec![(r.clone(), r.clone()), (r.clone(), EdgeRelation::single_class(g))];
    for (a, b) in ordered_pairs(r.class_count()).filter(|(a, b)| a < b) {
        if let Ok(s) = r.merge_classes(&[a, b]) {
            pairs.push((r.clone(), s));
        }
    }
    if let UspStatus::UspByWitness(w) = status {
        pairs.push((w.clone(), r.clone()));
    }
    if let Some(w) = witness {
        if w.is_finer(r).unwrap_or(false) {
            pairs.push((w.clone(), r.clone()));
        }
    }
    for (q, s) in &pairs {
        let v = checks::monotonicity(g, q, s);
        if !v.is_pass() {
            return v;
        }
    }
    Verdict::Pass
}

fn decomposition_checks(c: Option<&CertifiedUsp>) -> (Verdict, Verdict, Verdict) {
    let Some(c) = c else {
        let skip = || Verdict::skipped("relation is not certified as a USP-relation");
        return (skip(), skip(), skip());
    };
    let fail = |e: Error| Verdict::Fail {
        witness: Witness {
            message: e.to_string(),
            vertices: vec![],
            edges: vec![],
            classes: vec![],
        },
    };
    let quotient = match verify_quotient_decomposition(c) {
        Ok(_) => Verdict::Pass,
        Err(Error::TooLarge { n, limit }) => Verdict::skipped(format!("quotient has {n} vertices, limit {limit}")),
        Err(e) => fail(e),
    };
    let loopless = match verify_loopless_decomposition(c) {
        Ok(_) => Verdict::Pass,
        Err(Error::PreconditionNotMet(why)) => Verdict::skipped(why),
        Err(Error::TooLarge { n, limit }) => Verdict::skipped(format!("quotient has {n} vertices, limit {limit}")),
        Err(e) => fail(e),
    };
    let weighted = match verify_weighted_decomposition(c) {
        Ok(_) => Verdict::Pass,
        Err(Error::TooLarge { n, limit }) => Verdict::skipped(format!("quotient has {n} vertices, limit {limit}")),
        Err(e) => fail(e),
    };
    (quotient, loopless, weighted)
}
