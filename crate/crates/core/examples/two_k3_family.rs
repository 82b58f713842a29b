//! A non-normal I-surface glued from two K3 double planes along a line,
//! and its degenerations as the two branch sextics acquire singular points.
//!
//! ```bash
//! cargo run --example two_k3_family
//! ```

use std::collections::BTreeSet;

use ihodge::scenario::{evaluate, verify_chain, Catalog, NormalizationPiece, ScenarioKind};

fn pieces(kind: &ScenarioKind) -> Vec<&NormalizationPiece> {
    match kind {
        ScenarioKind::Normal { piece } => vec![piece],
        ScenarioKind::NonNormal { pieces, .. } => pieces.iter().collect(),
        ScenarioKind::ConeCover(_) => Vec::new(),
    }
}

fn main() {
    let catalog = Catalog::bundled().retain(|s| s.id.starts_with("two-k3-"));
    let mut seen = BTreeSet::new();
    for s in catalog.scenarios() {
        let ev = evaluate(s).unwrap();
        let pieces: Vec<String> = pieces(&s.kind).iter().map(|p| p.description()).collect();
        println!("{:<32} {}  [{}]", s.id, ev.hodge_type, pieces.join(" + "));
        for seq in &ev.sequences {
            println!("    {}: {}", seq.name, seq.solution.unknown);
        }
        seen.insert(ev.hodge_type);
    }
    println!("types realized: {}", seen.len());
    for chain in catalog.chains() {
        let report = verify_chain(&catalog, chain).unwrap();
        let steps: Vec<String> = report.steps.iter().map(|(_, t)| t.to_string()).collect();
        println!("{}: {}", chain.id, steps.join(" → "));
    }
}
