//! δ, its closure δ*, and the square property on a few small graphs.

use usp_graph::fixtures;
use usp_graph::square_property::{compute_delta, delta_pairs, has_square_property, satisfies_s1, s2_violation};
use usp_graph::EdgeRelation;

fn main() -> usp_graph::Result<()> {
    for (name, g) in [("C4", fixtures::c4()), ("Q3", fixtures::q3()), ("K3", fixtures::k3())] {
        let d = compute_delta(&g);
        println!(
            "{name}: {} delta pairs, {} delta* classes, S1 for delta*: {}",
            delta_pairs(&g).len(),
            d.class_count(),
            satisfies_s1(&g, &d).0
        );
    }

    // A relation that splits opposite edges of a square fails the square property.
    let c4 = fixtures::c4();
    let r = EdgeRelation::discrete(&c4);
    println!("C4 discrete: square property {}", has_square_property(&c4, &r)?);
    if let Some(sq) = s2_violation(&c4, &r) {
        println!("  offending square: {sq:?}");
    }
    Ok(())
}
