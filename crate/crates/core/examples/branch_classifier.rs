//! Local branch curve configurations, the singularity they give on the
//! double cover, and what that singularity contributes to `H²`.
//!
//! ```bash
//! cargo run --example branch_classifier
//! ```

use ihodge::branch::{
    classify, classify_with, mhs_effect_summary, B0Contact, ClassifierOptions, DPoint, IsolatedKind, LocalBranchConfig,
    MhsEffect,
};

fn describe(cfg: &LocalBranchConfig) -> String {
    match cfg {
        LocalBranchConfig::Isolated { kind } => format!("{kind:?}"),
        LocalBranchConfig::NonReduced { d_point, b0_contact } => format!("2D at {d_point:?}, B0 {b0_contact:?}"),
    }
}

fn main() {
    let configs = [
        LocalBranchConfig::isolated(IsolatedKind::DoublePoint),
        LocalBranchConfig::isolated(IsolatedKind::NegligibleTriple),
        LocalBranchConfig::isolated(IsolatedKind::OrdinaryQuadruple),
        LocalBranchConfig::isolated(IsolatedKind::DegenerateQuadruple),
        LocalBranchConfig::isolated(IsolatedKind::TriplePlusInfNearTriple { ordinary: true }),
        LocalBranchConfig::isolated(IsolatedKind::TriplePlusInfNearTriple { ordinary: false }),
        LocalBranchConfig::NonReduced { d_point: DPoint::SmoothPoint, b0_contact: B0Contact::None },
        LocalBranchConfig::NonReduced { d_point: DPoint::SmoothPoint, b0_contact: B0Contact::Transverse },
        LocalBranchConfig::tangency(0),
        LocalBranchConfig::tangency(2),
        LocalBranchConfig::d_node(),
    ];
    for cfg in &configs {
        let class = classify(cfg).unwrap();
        let effect = match &class.mhs_effect {
            MhsEffect::NoEffect => "none".to_string(),
            MhsEffect::ExceptionalCurve(e) => format!("exceptional curve with H¹ = {}", ihodge::curve::curve_h1(e)),
            MhsEffect::DoubleLocusNode => "adds a node to D̄".to_string(),
        };
        println!("{:<46} {:<28} {effect}", describe(cfg), class.name.to_string());
    }

    let longer = classify_with(
        &LocalBranchConfig::isolated(IsolatedKind::DegenerateQuadruple),
        ClassifierOptions { cycle_length: 4 },
    )
    .unwrap();
    if let MhsEffect::ExceptionalCurve(e) = longer.mhs_effect {
        println!("\ncusp resolved by a cycle of {} rational curves: H¹ = {}", e.components().len(), ihodge::curve::curve_h1(&e));
    }

    let bad = LocalBranchConfig::NonReduced { d_point: DPoint::Node, b0_contact: B0Contact::Transverse };
    println!("rejected: {}", classify(&bad).unwrap_err());

    let summary = mhs_effect_summary(&configs).unwrap();
    println!(
        "all of the above together: {} exceptional curves, {} new nodes of D̄",
        summary.exceptional.len(),
        summary.double_locus_nodes
    );
}
