//! Writes the built-in fixtures as instance files, plus DOT drawings.
//!
//! ```text
//! cargo run --example export_fixtures -- instances
//! ```

use std::path::PathBuf;

use usp_graph::fixtures;
use usp_graph::io::{export_dot, format_instance, parse_instance, DotOptions};
use usp_graph::partition::common_refinement;
use usp_graph::{Instance, LabeledRelation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "instances".into()));
    std::fs::create_dir_all(&dir)?;
    let mut all = fixtures::labeled_fixtures();
    let q3 = fixtures::q3();
    let d = usp_graph::square_property::compute_delta(&q3);
    all.push(Instance::unnamed("q3", q3).with_relation(LabeledRelation::with_default_labels(d)));
    all.push(Instance::unnamed("c4", fixtures::c4()));
    for inst in &all {
        let text = format_instance(inst);
        assert_eq!(&parse_instance(&text)?, inst);
        std::fs::write(dir.join(format!("{}.inst", inst.name)), &text)?;
        let r = inst.relation();
        let labels = inst.class_labels();
        let p = r.map(|r| common_refinement(&inst.graph, r)).transpose()?;
        let opts = DotOptions {
            relation: r,
            class_labels: Some(&labels),
            partition: p.as_ref(),
            styles: None,
        };
        let dot = export_dot(&inst.name, &inst.graph, &inst.vertex_names, &opts)?;
        std::fs::write(dir.join(format!("{}.dot", inst.name)), dot)?;
        println!("{}: {} vertices, {} edges", inst.name, inst.graph.vertex_count(), inst.graph.edge_count());
    }
    Ok(())
}
