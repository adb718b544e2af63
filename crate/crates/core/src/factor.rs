//! Prime factorization of small graphs with respect to the Cartesian
//! product.
//!
//! Every product relation has the square property and hence coarsens δ*, so
//! the two-class coarsenings of δ* are the only candidate splits. Each one is
//! tested with the product criterion; an accepted split comes with an
//! explicit isomorphism onto the product of its two factors.

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalForm};
use crate::product::{cartesian_product, split_as_product, ProductRelationTest};
use crate::relation::EdgeRelation;
use crate::square_property::{compute_delta, s1_violation};

pub const DEFAULT_CLASS_BOUND: usize = 20;

/// One accepted split: `graph ≅ factors.0 □ factors.1` with `relation` the
/// two-class product relation (class 0 moves in the first factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate {
    pub graph: Graph,
    pub relation: EdgeRelation,
    pub factors: (Graph, Graph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    /// Prime factors ordered by decreasing vertex count, then edge count, then
    /// canonical form. Empty for `K1`.
    pub factors: Vec<Graph>,
    /// Splits in the order they were found (depth first).
    pub certificates: Vec<SplitCertificate>,
}

impl FactorizationResult {
    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1
    }

    /// The product of the factors.
    pub fn product(&self) -> Graph {
        let k1 = Graph::new(1, []).expect("K1");
        self.factors.iter().fold(k1, |acc, f| cartesian_product(&acc, f))
    }
}

/// Factors `g` into primes. Fails with `BudgetExceeded` when some graph on
/// the way has more than `bound` δ*-classes.
pub fn prime_factorize_small(g: &Graph, bound: usize) -> Result<FactorizationResult> {
    let mut factors = Vec::new();
    let mut certificates = Vec::new();
    factorize(g, bound, &mut factors, &mut certificates)?;
    let mut keyed = factors
        .into_iter()
        .map(|f| Ok((factor_key(&f)?, f)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(FactorizationResult {
        factors: keyed.into_iter().map(|(_, f)| f).collect(),
        certificates,
    })
}

type FactorKey = (usize, usize, Option<CanonicalForm>);

fn factor_key(g: &Graph) -> Result<FactorKey> {
    let form = match canonical_form(g) {
        Ok(f) => Some(f),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok((g.vertex_count(), g.edge_count(), form))
}

fn factorize(
    g: &Graph,
    bound: usize,
    out: &mut Vec<Graph>,
    certs: &mut Vec<SplitCertificate>,
) -> Result<()> {
    if g.vertex_count() == 1 {
        return Ok(());
    }
    match first_split(g, bound)? {
        Some(cert) => {
            let (a, b) = cert.factors.clone();
            certs.push(cert);
            factorize(&a, bound, out, certs)?;
            factorize(&b, bound, out, certs)
        }
        None => {
            out.push(g.clone());
            Ok(())
        }
    }
}

/// The least passing split: the class set containing δ*-class 0 is
/// enumerated in increasing bitmask order over the remaining classes.
fn first_split(g: &Graph, bound: usize) -> Result<Option<SplitCertificate>> {
    let delta = compute_delta(g);
    let k = delta.class_count();
    if k > bound {
        return Err(Error::BudgetExceeded(format!(
            "{k} δ*-classes exceed the bound of {bound}"
        )));
    }
    if k < 2 {
        return Ok(None);
    }
    let full: u64 = (1 << (k - 1)) - 1;
    for mask in 0..full {
        let group_of: Vec<usize> = (0..k)
            .map(|c| usize::from(c != 0 && mask & (1 << (c - 1)) == 0))
            .collect();
        let r = delta.coarsen(&group_of)?;
        // Product relations satisfy (S1), which certifies the split.
        if s1_violation(g, &r).is_some() {
            continue;
        }
        if let ProductRelationTest::Product { factors, .. } = split_as_product(g, &r, 0)? {
            return Ok(Some(SplitCertificate {
                graph: g.clone(),
                relation: r,
                factors,
            }));
        }
    }
    Ok(None)
}

/// A short name: `K1`, `Kn`, `Pn`, `Cn`, or `G(n,m)`.
pub fn describe_graph(g: &Graph) -> String {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let degrees = || (0..n).map(|v| g.degree(v));
    if g.is_complete() {
        format!("K{n}")
    } else if m == n && degrees().all(|d| d == 2) {
        format!("C{n}")
    } else if m + 1 == n && degrees().all(|d| d <= 2) {
        format!("P{n}")
    } else {
        format!("G({n},{m})")
    }
}

/// Factors joined with ` □ `.
pub fn describe_factors(factors: &[Graph]) -> String {
    if factors.is_empty() {
        return "K1".to_string();
    }
    factors.iter().map(describe_graph).collect::<Vec<_>>().join(" □ ")
}

/// Orders factor lists the same way [`prime_factorize_small`] does.
pub fn sort_factors(factors: &mut [Graph]) -> Result<()> {
    let keys = factors.iter().map(factor_key).collect::<Result<Vec<_>>>()?;
    let mut idx: Vec<usize> = (0..factors.len()).collect();
    idx.sort_by_key(|&i| Reverse(keys[i].clone()));
    let sorted: Vec<Graph> = idx.iter().map(|&i| factors[i].clone()).collect();
    factors.clone_from_slice(&sorted);
    Ok(())
}
