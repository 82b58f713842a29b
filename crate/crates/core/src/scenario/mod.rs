//! Degeneration scenarios. A scenario describes a stable I-surface through
//! its normalization (and, for normal pieces, a resolution). Evaluation
//! assembles the long exact sequences of the normalization and of the
//! resolution, solves them slot by slot, and reads off the Hodge type.

mod catalog;
mod cover;
mod profile;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::branch::{
    mhs_effect_summary_with, BranchError, ClassifierOptions, LocalBranchConfig, DEFAULT_CYCLE_LENGTH,
};
use crate::chase::{
    solve_detailed, ChaseError, ExactSequenceProblem, RankAnnotation, RankRule, Solution,
};
use crate::curve::{curve_h1, CurveData, CurveError};
use crate::mhs::{hodge_type_of, BigradedDims, HodgeType, MhsError};
use crate::wps::{check_triple, TripleNumerics, TripleReport, WpsError};

pub use catalog::{
    realization_report, verify_chain, Catalog, ChainReport, DegenerationChain, EdgeWitness, LoadError,
    RealizationReport, ScenarioFile, cover_table_expected, BUNDLED_FILES, COVER_TABLE_EXPECTED,
};
pub use cover::{
    build_nonnormal_cover, expand_cover, CoverExpansion, CoverScenario, CoverSpec, CoverSummary,
    CoverTableRow,
};
pub use profile::{StandardSurface, SurfaceProfile};

/// Term labels of the assembled sequences. Overrides refer to maps by the
/// label of their source term.
pub mod labels {
    pub const H0_XBAR: &str = "H0(Xbar)";
    pub const H0_YBAR_SING: &str = "H0(Ybar)+H0(Sing)";
    pub const H0_E: &str = "H0(E)";
    pub const H1_XBAR: &str = "H1(Xbar)";
    pub const H1_YBAR: &str = "H1(Ybar)";
    pub const H1_E: &str = "H1(E)";
    pub const H2_XBAR: &str = "H2(Xbar)";
    pub const H2_YBAR: &str = "H2(Ybar)";
    pub const H2_E: &str = "H2(E)";

    pub const H0_X: &str = "H0(X)";
    pub const H0_XBAR_D: &str = "H0(Xbar)+H0(D)";
    pub const H0_DBAR: &str = "H0(Dbar)";
    pub const H1_X: &str = "H1(X)";
    pub const H1_XBAR_D: &str = "H1(Xbar)+H1(D)";
    pub const H1_DBAR: &str = "H1(Dbar)";
    pub const H2_X: &str = "H2(X)";
    pub const H2_XBAR_D: &str = "H2(Xbar)+H2(D)";
    pub const H2_DBAR: &str = "H2(Dbar)";
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("{context}: {source}")]
    Chase {
        context: String,
        #[source]
        source: ChaseError,
    },
    #[error(transparent)]
    Mhs(#[from] MhsError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Branch(#[from] BranchError),
    #[error(transparent)]
    Wps(#[from] WpsError),
    #[error("{0:?} cannot occur on a normal piece")]
    NotNormalSingularity(LocalBranchConfig),
    #[error("resolved piece has no exceptional curves")]
    EmptyExceptional,
    #[error("not an I-surface: {0}")]
    NotAnIsurface(String),
    #[error("type {computed} violates r + 2s <= h11 = {h11}")]
    H11Violation { computed: HodgeType, h11: u32 },
    #[error("scenario {id}: expected {expected}, computed {computed}")]
    ExpectationMismatch { id: String, expected: HodgeType, computed: HodgeType },
    #[error("deg d = {0} is outside 1..=5")]
    InvalidCoverDegree(u32),
    #[error("unsupported degeneration: {0}")]
    UnsupportedDegeneration(String),
    #[error("unknown scenario id {0:?}")]
    UnknownScenario(String),
    #[error("chain {chain}: {from_id} has type {from} but the next scenario {to_id} has type {to}")]
    NonMonotoneChain {
        chain: String,
        from_id: String,
        from: HodgeType,
        to_id: String,
        to: HodgeType,
    },
    #[error("types never realized: {}", join_types(.0))]
    MissingType(Vec<HodgeType>),
    #[error("cover edges without a realizing chain: {}", join_edges(.0))]
    MissingEdge(Vec<(HodgeType, HodgeType)>),
    #[error("scenario {id}: {source}")]
    Evaluation {
        id: String,
        #[source]
        source: Box<ScenarioError>,
    },
}

impl ScenarioError {
    /// True when the failure comes from the exact-sequence solver.
    pub fn is_chase_error(&self) -> bool {
        match self {
            Self::Chase { .. } => true,
            Self::Evaluation { source, .. } => source.is_chase_error(),
            _ => false,
        }
    }
}

fn join_types(ts: &[HodgeType]) -> String {
    ts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn join_edges(es: &[(HodgeType, HodgeType)]) -> String {
    es.iter().map(|(a, b)| format!("{a}->{b}")).collect::<Vec<_>>().join(", ")
}

/// A normal resolved piece: a resolution `Ȳ`, and the exceptional curves
/// over the non-canonical points, given explicitly or via the local branch
/// configurations producing them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedPiece {
    pub resolution: SurfaceProfile,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exceptional: Vec<CurveData>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub singularities: Vec<LocalBranchConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_length: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub overrides: Vec<RankAnnotation>,
}

impl ResolvedPiece {
    pub fn new(resolution: impl Into<SurfaceProfile>) -> Self {
        Self {
            resolution: resolution.into(),
            exceptional: Vec::new(),
            singularities: Vec::new(),
            cycle_length: None,
            overrides: Vec::new(),
        }
    }

    pub fn with_singularity(mut self, cfg: LocalBranchConfig) -> Self {
        self.singularities.push(cfg);
        self
    }

    pub fn with_exceptional(mut self, curve: CurveData) -> Self {
        self.exceptional.push(curve);
        self
    }

    pub fn with_override(mut self, annotation: RankAnnotation) -> Self {
        self.overrides.push(annotation);
        self
    }

    /// All exceptional curves, explicit ones first.
    pub fn exceptional_curves(&self) -> Result<Vec<CurveData>, ScenarioError> {
        if let Some(cfg) = self.singularities.iter().find(|c| !matches!(c, LocalBranchConfig::Isolated { .. })) {
            return Err(ScenarioError::NotNormalSingularity(*cfg));
        }
        let opts = ClassifierOptions { cycle_length: self.cycle_length.unwrap_or(DEFAULT_CYCLE_LENGTH) };
        let summary = mhs_effect_summary_with(&self.singularities, opts)?;
        let mut out = self.exceptional.clone();
        out.extend(summary.exceptional);
        if out.is_empty() {
            return Err(ScenarioError::EmptyExceptional);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizationPiece {
    Smooth(SurfaceProfile),
    Resolved(ResolvedPiece),
}

impl NormalizationPiece {
    pub fn smooth(profile: impl Into<SurfaceProfile>) -> Self {
        Self::Smooth(profile.into())
    }

    /// `χ(O)` of the normal surface. Each exceptional curve contributes its
    /// arithmetic genus, which is the geometric genus for rational and
    /// minimally elliptic points.
    pub fn chi(&self) -> Result<i64, ScenarioError> {
        match self {
            Self::Smooth(p) => Ok(p.chi),
            Self::Resolved(r) => {
                let extra: i64 = r.exceptional_curves()?.iter().map(|e| i64::from(e.arithmetic_genus())).sum();
                Ok(r.resolution.chi + extra)
            }
        }
    }

    pub fn description(&self) -> String {
        match self {
            Self::Smooth(p) => p.description(),
            Self::Resolved(r) => format!("{} with singular points", r.resolution.description()),
        }
    }
}

/// One assembled and solved exact sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedSequence {
    pub name: String,
    pub problem: ExactSequenceProblem,
    pub solution: Solution,
}

impl SolvedSequence {
    /// Per-slot alternating sums of the dimensions along the sequence.
    pub fn alternating_sums(&self) -> BTreeMap<(u8, u8), Option<i64>> {
        self.solution.components.iter().map(|c| (c.pq, c.alternating_sum())).collect()
    }
}

/// Cohomology of a normal piece as used in the normalization sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceCohomology {
    pub h1: BigradedDims,
    pub h2_edge: BigradedDims,
    pub chi: i64,
    pub sequences: Vec<SolvedSequence>,
}

fn solve_named(name: String, problem: ExactSequenceProblem) -> Result<SolvedSequence, ScenarioError> {
    match solve_detailed(&problem) {
        Ok(solution) => Ok(SolvedSequence { name, problem, solution }),
        Err(source) => Err(ScenarioError::Chase { context: name, source }),
    }
}

/// Adds `defaults` except those on a map that some override addresses, then
/// the overrides.
fn annotate(
    mut problem: ExactSequenceProblem,
    defaults: Vec<RankAnnotation>,
    overrides: &[RankAnnotation],
) -> Result<ExactSequenceProblem, ChaseError> {
    let overridden: BTreeSet<usize> =
        overrides.iter().map(|a| problem.resolve_map(&a.map)).collect::<Result<_, _>>()?;
    for d in defaults {
        if !overridden.contains(&problem.resolve_map(&d.map)?) {
            problem.annotations.push(d);
        }
    }
    problem.annotations.extend(overrides.iter().cloned());
    Ok(problem)
}

/// The resolution sequence with `H1(Xbar)` as the unknown when
/// `solve_h1`, otherwise `H2(Xbar)`; the other one is a placeholder.
pub fn resolution_sequence(piece: &ResolvedPiece, solve_h1: bool) -> Result<ExactSequenceProblem, ScenarioError> {
    use labels::*;
    let curves = piece.exceptional_curves()?;
    let k = curves.len() as u32;
    let cc: u32 = curves.iter().map(CurveData::connected_components).sum();
    let h1_e: BigradedDims = curves.iter().map(curve_h1).sum();
    let mut p = ExactSequenceProblem::new()
        .known(H0_XBAR, BigradedDims::weight_zero(1))
        .known(H0_YBAR_SING, BigradedDims::weight_zero(1 + k))
        .known(H0_E, BigradedDims::weight_zero(cc));
    p = if solve_h1 { p.unknown(H1_XBAR) } else { p.placeholder(H1_XBAR) };
    p = p.known(H1_YBAR, piece.resolution.h1.clone()).known(H1_E, h1_e);
    p = if solve_h1 { p.placeholder(H2_XBAR) } else { p.unknown(H2_XBAR) };
    p = p
        .known(H2_YBAR, piece.resolution.h2_edge.clone())
        .known(H2_E, BigradedDims::zero());
    let defaults = vec![RankAnnotation::from_term(H2_YBAR, RankRule::Surjective)];
    annotate(p, defaults, &piece.overrides)
        .map_err(|source| ScenarioError::Chase { context: "resolution sequence".into(), source })
}

/// Low-degree cohomology of a normal piece. Smooth pieces read it off the
/// profile; resolved ones solve the resolution sequence twice.
pub fn evaluate_piece(piece: &NormalizationPiece) -> Result<PieceCohomology, ScenarioError> {
    match piece {
        NormalizationPiece::Smooth(p) => Ok(PieceCohomology {
            h1: p.h1.clone(),
            h2_edge: p.h2_edge.clone(),
            chi: p.chi,
            sequences: Vec::new(),
        }),
        NormalizationPiece::Resolved(r) => {
            let a = solve_named("resolution sequence for H1(Xbar)".into(), resolution_sequence(r, true)?)?;
            let b = solve_named("resolution sequence for H2(Xbar)".into(), resolution_sequence(r, false)?)?;
            Ok(PieceCohomology {
                h1: a.solution.unknown.clone(),
                h2_edge: b.solution.unknown.clone(),
                chi: piece.chi()?,
                sequences: vec![a, b],
            })
        }
    }
}

/// The normalization sequence of a non-normal surface with `H2(X)` as the
/// unknown.
pub fn normalization_sequence(
    pieces: &[PieceCohomology],
    d: &CurveData,
    dbar: &CurveData,
    overrides: &[RankAnnotation],
) -> Result<ExactSequenceProblem, ScenarioError> {
    use labels::*;
    let h1_xbar: BigradedDims = pieces.iter().map(|p| &p.h1).sum();
    let h2_xbar: BigradedDims = pieces.iter().map(|p| &p.h2_edge).sum();
    let p = ExactSequenceProblem::new()
        .known(H0_X, BigradedDims::weight_zero(1))
        .known(H0_XBAR_D, BigradedDims::weight_zero(pieces.len() as u32 + d.connected_components()))
        .known(H0_DBAR, BigradedDims::weight_zero(dbar.connected_components()))
        .placeholder(H1_X)
        .known(H1_XBAR_D, h1_xbar.plus(&curve_h1(d)))
        .known(H1_DBAR, curve_h1(dbar))
        .unknown(H2_X)
        .known(H2_XBAR_D, h2_xbar)
        .known(H2_DBAR, BigradedDims::zero());
    // With H¹(X̄) = 0 the map reduces to the pullback H¹(D) → H¹(D̄),
    // injective since D̄ → D is finite and surjective.
    let defaults = if h1_xbar.is_zero() {
        vec![RankAnnotation::from_term(H1_XBAR_D, RankRule::Injective)]
    } else {
        Vec::new()
    };
    annotate(p, defaults, overrides)
        .map_err(|source| ScenarioError::Chase { context: "normalization sequence".into(), source })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioKind {
    Normal {
        piece: NormalizationPiece,
    },
    NonNormal {
        pieces: Vec<NormalizationPiece>,
        d: CurveData,
        dbar: CurveData,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        overrides: Vec<RankAnnotation>,
    },
    /// A double cover of the quadric cone branched over `B₀ + 2D`.
    ConeCover(CoverSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub id: String,
    pub kind: ScenarioKind,
    #[serde(default)]
    pub expected: Option<HodgeType>,
    #[serde(default)]
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h11: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<TripleNumerics>,
    /// Free-form annotations such as stratum dimensions.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl Scenario {
    pub fn new(id: impl Into<String>, kind: ScenarioKind) -> Self {
        Self {
            id: id.into(),
            kind,
            expected: None,
            citation: String::new(),
            h11: None,
            triple: None,
            metadata: BTreeMap::new(),
        }
    }

    pub fn normal(id: impl Into<String>, piece: NormalizationPiece) -> Self {
        Self::new(id, ScenarioKind::Normal { piece })
    }

    pub fn expecting(mut self, t: HodgeType) -> Self {
        self.expected = Some(t);
        self
    }

    pub fn is_normal(&self) -> bool {
        matches!(self.kind, ScenarioKind::Normal { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub id: String,
    pub hodge_type: HodgeType,
    /// The `pq = 0` part of `H²(X)`.
    pub h2: BigradedDims,
    pub pieces: Vec<PieceCohomology>,
    /// Every solved sequence, resolution sequences first.
    pub sequences: Vec<SolvedSequence>,
    pub triple: Option<TripleReport>,
    pub cover: Option<CoverSummary>,
}

/// Evaluates without comparing against `expected`.
pub fn compute(s: &Scenario) -> Result<Evaluation, ScenarioError> {
    let mut cover = None;
    let mut derived_triple = None;
    let (pieces, sequences, h2) = match &s.kind {
        ScenarioKind::Normal { piece } => {
            let pc = evaluate_piece(piece)?;
            if pc.chi != 3 {
                return Err(ScenarioError::NotAnIsurface(format!("χ(O) = {} instead of 3", pc.chi)));
            }
            let h2 = pc.h2_edge.clone();
            let seqs = pc.sequences.clone();
            (vec![pc], seqs, h2)
        }
        ScenarioKind::NonNormal { pieces, d, dbar, overrides } => nonnormal(pieces, d, dbar, overrides)?,
        ScenarioKind::ConeCover(spec) => {
            let ex = expand_cover(spec)?;
            let out = nonnormal(&ex.pieces, &ex.d, &ex.dbar, &[])?;
            derived_triple = Some(ex.numerics);
            cover = Some(ex.summary);
            out
        }
    };
    let hodge_type = hodge_type_of(&h2)?;
    let pure = h2.get(2, 0);
    if hodge_type.r + hodge_type.s + pure != 2 {
        return Err(ScenarioError::NotAnIsurface(format!(
            "h^(0,0) + h^(1,0) + h^(2,0) of H² is {}, but p_g = 2",
            hodge_type.r + hodge_type.s + pure
        )));
    }
    if let Some(h11) = s.h11 {
        if !hodge_type.fits_h11(h11) {
            return Err(ScenarioError::H11Violation { computed: hodge_type, h11 });
        }
    }
    let triple = s.triple.as_ref().or(derived_triple.as_ref()).map(check_triple);
    Ok(Evaluation { id: s.id.clone(), hodge_type, h2, pieces, sequences, triple, cover })
}

type Assembled = (Vec<PieceCohomology>, Vec<SolvedSequence>, BigradedDims);

fn nonnormal(
    pieces: &[NormalizationPiece],
    d: &CurveData,
    dbar: &CurveData,
    overrides: &[RankAnnotation],
) -> Result<Assembled, ScenarioError> {
    let pcs = pieces.iter().map(evaluate_piece).collect::<Result<Vec<_>, _>>()?;
    let mut sequences: Vec<SolvedSequence> = pcs.iter().flat_map(|p| p.sequences.iter().cloned()).collect();
    let problem = normalization_sequence(&pcs, d, dbar, overrides)?;
    let solved = solve_named("normalization sequence".into(), problem)?;
    let h2 = solved.solution.unknown.clone();
    sequences.push(solved);
    Ok((pcs, sequences, h2))
}

/// Evaluates and checks the computed type against `expected`.
pub fn evaluate(s: &Scenario) -> Result<Evaluation, ScenarioError> {
    let ev = compute(s)?;
    match s.expected {
        Some(expected) if expected != ev.hodge_type => Err(ScenarioError::ExpectationMismatch {
            id: s.id.clone(),
            expected,
            computed: ev.hodge_type,
        }),
        _ => Ok(ev),
    }
}
