//! Runs every statement check on the fixtures and a seeded random suite.
//!
//! ```text
//! cargo run --example harness -- 42 50
//! ```

use usp_graph::harness::{generate, run_all, HarnessInput, HarnessOptions};

fn main() -> usp_graph::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let opts = HarnessOptions {
        seed: Some(seed),
        ..Default::default()
    };
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    for inst in generate::suite(seed, count, 10) {
        let mut input = HarnessInput::new(&inst.name, &inst.graph, &inst.relation);
        input.witness = inst.witness.as_ref();
        let rep = run_all(&input, &opts)?;
        let (p, f, s) = rep.counts();
        passed += p;
        failed += f;
        skipped += s;
        if rep.is_bug() {
            print!("{}", rep.to_human());
        }
    }
    println!("{passed} passed, {failed} failed, {skipped} skipped");
    Ok(())
}
