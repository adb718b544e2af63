//! Deciding whether a relation has a finer relation with the unique square
//! property.

use usp_graph::fixtures;
use usp_graph::square_property::satisfies_s1;
use usp_graph::usp::{certify_usp, UspBudget, UspStatus};
use usp_graph::EdgeRelation;

fn show(name: &str, status: &UspStatus) {
    let text = match status {
        UspStatus::HasUsp => "has USP itself".to_string(),
        UspStatus::UspByWitness(w) => format!("USP via a finer relation with {} classes", w.class_count()),
        UspStatus::NotUsp => "not a USP-relation".to_string(),
        UspStatus::Unknown { explored } => format!("undecided after {explored} search nodes"),
    };
    println!("{name}: {text}");
}

fn main() -> usp_graph::Result<()> {
    let budget = UspBudget::default();

    let fig1 = fixtures::fig1();
    let r = fig1.relation().expect("labeled");
    println!("fig1 satisfies S1 directly: {}", satisfies_s1(&fig1.graph, r).0);
    show("fig1", &certify_usp(&fig1.graph, r, None, &budget)?);

    let m8 = fixtures::m8();
    show("m8", &certify_usp(&m8.graph, m8.relation().unwrap(), None, &budget)?);

    let p3 = fixtures::path(3);
    show("P3 discrete", &certify_usp(&p3, &EdgeRelation::discrete(&p3), None, &budget)?);

    // Merging two cube directions keeps S1.
    let q3 = fixtures::q3();
    let d = usp_graph::square_property::compute_delta(&q3);
    let merged = d.merge_classes(&[0, 1])?;
    show("Q3 merged", &certify_usp(&q3, &merged, None, &budget)?);
    Ok(())
}
