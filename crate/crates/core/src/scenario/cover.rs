//! Double covers of the quadric cone `P(1,1,2)` branched over `B₀ + 2D`,
//! with `deg B₀ = 10 - 2 deg D`, and their local degenerations.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::{NormalizationPiece, ResolvedPiece, Scenario, ScenarioError, ScenarioKind, StandardSurface};
use crate::branch::{
    classify, IsolatedKind, LocalBranchConfig, MhsEffect, SingularityName,
    DEFAULT_CYCLE_LENGTH,
};
use crate::curve::{intersection_count, riemann_hurwitz_double, wps_curve_genus, CurveData, DoubleCover, Splitting};
use crate::mhs::HodgeType;
use crate::wps::{log_canonical_square, TripleNumerics};

const FLAG_CITATION: &str =
    "log canonical and Diff-invariant for general B₀ and D, and for the listed local degenerations";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSpec {
    pub deg_d: u32,
    /// Singular points of `B₀` away from `D`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b0_points: Vec<IsolatedKind>,
    /// Special points of `D`: tangencies with `B₀` and nodes of `D`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub contacts: Vec<LocalBranchConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_length: Option<u32>,
}

impl CoverSpec {
    /// General `B₀` and `D`.
    pub fn general(deg_d: u32) -> Self {
        Self { deg_d, b0_points: Vec::new(), contacts: Vec::new(), cycle_length: None }
    }

    pub fn with_b0_point(mut self, kind: IsolatedKind) -> Self {
        self.b0_points.push(kind);
        self
    }

    pub fn with_contact(mut self, cfg: LocalBranchConfig) -> Self {
        self.contacts.push(cfg);
        self
    }
}

/// Derived data of a cone cover, as listed in the table of general covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSummary {
    pub deg_d: u32,
    pub deg_g: u32,
    pub xbar: String,
    /// Arithmetic genus of `D`.
    pub g_d: u32,
    /// Arithmetic genus of `D̄`, written `g+g` when `D̄ = D ⊔ D`.
    pub g_dbar: String,
    /// Branch points of `D̄ → D` for general data, `B₀ ∩ D`.
    pub branch_points: u32,
    /// The same count with the vertex added when `D` passes through it.
    pub branch_points_with_vertex: u32,
    pub tangencies: u32,
    pub d_nodes: u32,
    pub singularities: Vec<SingularityName>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverExpansion {
    pub pieces: Vec<NormalizationPiece>,
    pub d: CurveData,
    pub dbar: CurveData,
    pub numerics: TripleNumerics,
    pub summary: CoverSummary,
}

/// Normalization of the cover for general data of the given row.
fn general_xbar(deg_d: u32) -> (Vec<StandardSurface>, &'static str) {
    match deg_d {
        1 => (vec![StandardSurface::K3], "K3"),
        2 => (vec![StandardSurface::DelPezzo(1)], "del Pezzo of degree 1"),
        3 => (vec![StandardSurface::DelPezzo(4)], "del Pezzo of degree 4"),
        4 => (vec![StandardSurface::ProjectivePlane], "P^2"),
        _ => (vec![StandardSurface::WeightedPlane(1, 1, 2); 2], "two copies of P(1,1,2)"),
    }
}

fn as_u32(x: Rational64, what: &str) -> Result<u32, ScenarioError> {
    if x.is_integer() && *x.numer() >= 0 {
        Ok(*x.numer() as u32)
    } else {
        Err(ScenarioError::UnsupportedDegeneration(format!("{what} = {x} is not a count")))
    }
}

pub fn expand_cover(spec: &CoverSpec) -> Result<CoverExpansion, ScenarioError> {
    let deg_d = spec.deg_d;
    if !(1..=5).contains(&deg_d) {
        return Err(ScenarioError::InvalidCoverDegree(deg_d));
    }
    let deg_g = 10 - 2 * deg_d;
    let g_d = wps_curve_genus(i64::from(deg_d))?;
    let b = as_u32(intersection_count(i64::from(deg_g), i64::from(deg_d)), "B₀·D")?;
    let split = b == 0;

    let mut singularities = Vec::new();
    let (mut tangencies, mut d_nodes) = (0u32, 0u32);
    for cfg in &spec.contacts {
        if let LocalBranchConfig::Isolated { .. } = cfg {
            return Err(ScenarioError::UnsupportedDegeneration(format!(
                "{cfg:?} is not a point of D; list it under b0_points"
            )));
        }
        let class = classify(cfg)?;
        if class.mhs_effect == MhsEffect::DoubleLocusNode {
            match class.name {
                SingularityName::DegenerateCuspNodePair => d_nodes += 1,
                _ => tangencies += 1,
            }
        }
        singularities.push(class.name);
    }
    if 2 * tangencies > b {
        return Err(ScenarioError::UnsupportedDegeneration(format!(
            "{tangencies} tangencies need {} points of B₀ ∩ D, only {b} available",
            2 * tangencies
        )));
    }
    if d_nodes > g_d {
        return Err(ScenarioError::UnsupportedDegeneration(format!(
            "a curve of arithmetic genus {g_d} cannot have {d_nodes} nodes"
        )));
    }

    let d = CurveData::irreducible("D", g_d - d_nodes, d_nodes);
    let dbar = if split {
        d.disjoint_union(&d, "'")
    } else {
        let free = b - 2 * tangencies;
        let declared = (free == 0).then_some(Splitting::Connected);
        match riemann_hurwitz_double(g_d - d_nodes, free, declared)? {
            DoubleCover::Connected { genus } => CurveData::irreducible("Dbar", genus, tangencies + 2 * d_nodes),
            DoubleCover::Split { .. } => unreachable!("only the unbranched split case is declared split"),
        }
    };
    let g_dbar = if split { format!("{g_d}+{g_d}") } else { dbar.arithmetic_genus().to_string() };

    let (surfaces, xbar_name) = general_xbar(deg_d);
    let mut b0_configs = Vec::new();
    for kind in &spec.b0_points {
        let cfg = LocalBranchConfig::isolated(*kind);
        let class = classify(&cfg)?;
        if class.mhs_effect != MhsEffect::NoEffect {
            b0_configs.push(cfg);
        }
        singularities.push(class.name);
    }
    let pieces = if b0_configs.is_empty() {
        surfaces.into_iter().map(NormalizationPiece::smooth).collect::<Vec<_>>()
    } else if deg_d == 1 {
        // Elliptic points kill the holomorphic 2-form of the K3: the
        // resolution is rational with χ lowered by one per point.
        let mut piece = ResolvedPiece::new(StandardSurface::Rational);
        piece.singularities = b0_configs;
        piece.cycle_length = spec.cycle_length.filter(|&c| c != DEFAULT_CYCLE_LENGTH);
        vec![NormalizationPiece::Resolved(piece)]
    } else {
        return Err(ScenarioError::UnsupportedDegeneration(format!(
            "elliptic points of B₀ are only modelled for deg d = 1, not {deg_d}"
        )));
    };
    if let [NormalizationPiece::Resolved(r)] = pieces.as_slice() {
        let chi = NormalizationPiece::Resolved(r.clone()).chi()?;
        if chi != 2 {
            return Err(ScenarioError::UnsupportedDegeneration(format!(
                "{} elliptic points leave χ(X̄) = {chi}; at most one is possible",
                r.singularities.len()
            )));
        }
    }

    let chi_xbar = pieces.iter().map(NormalizationPiece::chi).sum::<Result<i64, _>>()?;
    let numerics = TripleNumerics {
        chi_xbar,
        chi_dbar: dbar.chi(),
        chi_d: d.chi(),
        lc_flag: true,
        diff_invariant_flag: true,
        log_canonical_square: log_canonical_square(i64::from(deg_g), i64::from(deg_d))?,
        flag_citation: FLAG_CITATION.into(),
    };
    let summary = CoverSummary {
        deg_d,
        deg_g,
        xbar: xbar_name.into(),
        g_d,
        g_dbar,
        branch_points: b,
        branch_points_with_vertex: b + deg_d % 2,
        tangencies,
        d_nodes,
        singularities,
    };
    Ok(CoverExpansion { pieces, d, dbar, numerics, summary })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverScenario {
    pub scenario: Scenario,
    pub summary: CoverSummary,
}

/// The cover for general `B₀` and `D` with `deg D = deg_d`, as an explicit
/// non-normal scenario with its triple numerics attached.
pub fn build_nonnormal_cover(deg_d: u32) -> Result<CoverScenario, ScenarioError> {
    let ex = expand_cover(&CoverSpec::general(deg_d))?;
    let mut scenario = Scenario::new(
        format!("cone-cover-d{deg_d}"),
        ScenarioKind::NonNormal { pieces: ex.pieces, d: ex.d, dbar: ex.dbar, overrides: Vec::new() },
    );
    scenario.citation = "double cover of P(1,1,2) for general B₀ and D".into();
    scenario.triple = Some(ex.numerics);
    Ok(CoverScenario { scenario, summary: ex.summary })
}

/// One row of the table of general cone covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverTableRow {
    pub hodge_type: HodgeType,
    pub deg_d: u32,
    pub deg_g: u32,
    pub xbar: String,
    pub g_dbar: String,
    pub g_d: u32,
}

impl CoverTableRow {
    pub fn format(&self) -> String {
        format!(
            "{} | {} | {} | {} | {} | {}",
            self.hodge_type, self.deg_d, self.deg_g, self.xbar, self.g_dbar, self.g_d
        )
    }
}
