//! Normal degenerations of a smooth I-surface, by letting the branch curve
//! acquire quadruple and `[3,3]`-points, evaluated through the resolution
//! sequence.
//!
//! ```bash
//! cargo run --example normal_degenerations
//! ```

use ihodge::cli::format_diamond;
use ihodge::scenario::{evaluate, verify_chain, Catalog};

fn main() {
    let catalog = Catalog::bundled();
    let normal = catalog.normal_only();
    for s in normal.scenarios().iter().filter(|s| s.id.starts_with("cone-")) {
        let ev = evaluate(s).unwrap();
        println!("{}: {}", s.id, ev.hodge_type);
        for line in format_diamond(&ev.h2).lines() {
            println!("    {line}");
        }
    }
    for chain in normal.chains().iter().filter(|c| c.id.starts_with("cone-")) {
        let report = verify_chain(&normal, chain).unwrap();
        let steps: Vec<String> = report.steps.iter().map(|(_, t)| t.to_string()).collect();
        println!("{}: {}", chain.id, steps.join(" → "));
    }
}
