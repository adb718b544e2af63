//! Quotients by P^R and their product decompositions, with DOT output.

use usp_graph::fixtures;
use usp_graph::io::{export_quotient_dot, export_weighted_dot};
use usp_graph::product::{verify_loopless_decomposition, verify_quotient_decomposition, verify_weighted_decomposition};
use usp_graph::usp::{CertifiedUsp, UspBudget};

fn main() -> usp_graph::Result<()> {
    for inst in [fixtures::m8(), fixtures::prism()] {
        let r = inst.relation().unwrap();
        let c = CertifiedUsp::certify(&inst.graph, r, None, &UspBudget::default())?;
        let d = verify_quotient_decomposition(&c)?;
        println!(
            "{}: quotient on {} blocks, {} edges, {} loops",
            inst.name,
            d.quotient.vertex_count(),
            d.quotient.edge_count(),
            d.quotient.loop_count()
        );
        for (label, f) in inst.class_labels().iter().zip(&d.factors) {
            println!("  factor {label}: {} vertices, {} loops", f.vertex_count(), f.loop_count());
        }
        let w = verify_weighted_decomposition(&c)?;
        println!("  weighted quotient has {} arcs", w.quotient.arc_count());
        match verify_loopless_decomposition(&c) {
            Ok(l) => println!("  loopless factors: {}", l.factors.len()),
            Err(e) => println!("  loopless form not applicable: {e}"),
        }
        if inst.name == "m8" {
            print!("{}", export_quotient_dot("m8", &d.quotient));
            print!("{}", export_weighted_dot("m8", &w.quotient));
        }
    }
    Ok(())
}
