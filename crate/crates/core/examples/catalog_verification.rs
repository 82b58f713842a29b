//! Evaluates the bundled catalog, checks every degeneration chain, and
//! shows which chain witnesses each cover edge of the Hodge type poset.
//!
//! ```bash
//! cargo run --example catalog_verification
//! ```

use ihodge::scenario::{realization_report, verify_chain, Catalog};

fn main() {
    let catalog = Catalog::bundled();
    let mut failures = 0;
    for (s, result) in catalog.evaluate_all() {
        match result {
            Ok(ev) => println!("{:<32} {}", s.id, ev.hodge_type),
            Err(e) => {
                failures += 1;
                println!("{:<32} {e}", s.id);
            }
        }
    }
    for chain in catalog.chains() {
        if let Err(e) = verify_chain(&catalog, chain) {
            failures += 1;
            println!("{e}");
        }
    }
    println!("{} scenarios, {} chains, {failures} failures", catalog.scenarios().len(), catalog.chains().len());

    for (name, cat) in [("full catalog", catalog.clone()), ("normal surfaces only", catalog.normal_only())] {
        let report = realization_report(&cat).unwrap();
        println!("\n{name}:");
        for w in &report.edges {
            println!("    {} → {} via {}", w.from, w.to, w.chain_id);
        }
    }
}
