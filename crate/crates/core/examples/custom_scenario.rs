//! Describing a degeneration in code, saving it as catalog JSON, loading it
//! back and evaluating it.
//!
//! ```bash
//! cargo run --example custom_scenario
//! cargo run --example custom_scenario -- /tmp/mine.json && cargo run -- run /tmp/mine.json
//! ```

use ihodge::branch::{IsolatedKind, LocalBranchConfig};
use ihodge::mhs::HodgeType;
use ihodge::scenario::{
    evaluate, Catalog, CoverSpec, NormalizationPiece, ResolvedPiece, Scenario, ScenarioFile, ScenarioKind,
    StandardSurface,
};

fn main() {
    // A double cover of the plane with one elliptic and one cusp point.
    let piece = ResolvedPiece::new(StandardSurface::Rational)
        .with_singularity(LocalBranchConfig::isolated(IsolatedKind::OrdinaryQuadruple))
        .with_singularity(LocalBranchConfig::isolated(IsolatedKind::DegenerateQuadruple));
    let normal = Scenario::normal("mine-two-points", NormalizationPiece::Resolved(piece))
        .expecting(HodgeType::new(1, 1).unwrap());

    // A cone cover given only by its branch data.
    let cover = Scenario::new(
        "mine-cone-cover",
        ScenarioKind::ConeCover(CoverSpec::general(4).with_contact(LocalBranchConfig::tangency(0))),
    )
    .expecting(HodgeType::new(1, 1).unwrap());

    let file = ScenarioFile { scenarios: vec![normal, cover], chains: Vec::new() };
    let json = serde_json::to_string_pretty(&file).unwrap();
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, &json).unwrap();
        eprintln!("wrote {path}");
    } else {
        println!("{json}");
    }

    let loaded = Catalog::from_files(vec![serde_json::from_str(&json).unwrap()]).unwrap();
    for s in loaded.scenarios() {
        match evaluate(s) {
            Ok(ev) => println!("{}: {}", s.id, ev.hodge_type),
            Err(e) => println!("{}: {e}", s.id),
        }
    }
}
