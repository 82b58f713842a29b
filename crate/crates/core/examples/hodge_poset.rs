//! The six Hodge types of a surface with `h²` pure part ≤ 2, their polarized
//! order and the cover relation, with Graphviz output.
//!
//! ```bash
//! cargo run --example hodge_poset
//! cargo run --example hodge_poset | dot -Tsvg > poset.svg
//! ```

use ihodge::mhs::{build_poset, polarized_leq, HodgeType};

fn main() {
    let poset = build_poset();
    for t in &poset.elements {
        let above: Vec<String> =
            HodgeType::all().into_iter().filter(|u| u != t && polarized_leq(*t, *u)).map(|u| u.to_string()).collect();
        let above = if above.is_empty() { "nothing".to_string() } else { above.join(", ") };
        eprintln!("{t} (level {}) degenerates to {above}", poset.level(*t));
    }
    println!("digraph hodge_types {{");
    for t in &poset.elements {
        println!("  \"{}\";", t);
    }
    for (a, b) in &poset.covers {
        println!("  \"{a}\" -> \"{b}\";");
    }
    println!("}}");
}
