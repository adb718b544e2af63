//! Class partitions, the common refinement P^R, and equitability.

use usp_graph::fixtures;
use usp_graph::partition::{class_partition, common_refinement, complement_partition, is_equitable};

fn main() -> usp_graph::Result<()> {
    let m8 = fixtures::m8();
    let (g, r) = (&m8.graph, m8.relation().unwrap());
    for (c, label) in m8.class_labels().iter().enumerate() {
        println!("{label}: G_phi blocks {:?}", class_partition(g, r, c)?.blocks());
        println!("{label}: complement blocks {:?}", complement_partition(g, r, c)?.blocks());
    }
    let p = common_refinement(g, r)?;
    println!("P^R = {:?}", p.blocks());
    let eq = is_equitable(g, &p)?;
    println!("equitable: {}", eq.is_equitable());
    if let Some(m) = eq.matrix() {
        for row in m.rows() {
            println!("  {row:?}");
        }
    }
    Ok(())
}
