//! Local configurations of the branch curve on the cone and the slc
//! singularities they produce on the double cover.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::CurveData;

/// Isolated singular points of a reduced branch curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsolatedKind {
    DoublePoint,
    /// A triple point whose infinitely near points are at most double.
    NegligibleTriple,
    OrdinaryQuadruple,
    /// A quadruple point with tangent local branches.
    DegenerateQuadruple,
    /// A `[3,3]`-point: a triple point with an infinitely near triple point.
    TriplePlusInfNearTriple { ordinary: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DPoint {
    SmoothPoint,
    Node,
}

/// Contact of the non-reduced part `D` with the reduced branch curve `B₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum B0Contact {
    None,
    Transverse,
    /// `(D, B₀)_p = 2`; `n = 0` for smooth `B₀`, `n ≥ 1` for an `A_n` point of `B₀`.
    Tangent { n: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LocalBranchConfig {
    Isolated { kind: IsolatedKind },
    NonReduced { d_point: DPoint, b0_contact: B0Contact },
}

impl LocalBranchConfig {
    pub fn isolated(kind: IsolatedKind) -> Self {
        Self::Isolated { kind }
    }

    pub fn tangency(n: u32) -> Self {
        Self::NonReduced { d_point: DPoint::SmoothPoint, b0_contact: B0Contact::Tangent { n } }
    }

    pub fn d_node() -> Self {
        Self::NonReduced { d_point: DPoint::Node, b0_contact: B0Contact::None }
    }

    pub fn validate(&self) -> Result<(), BranchError> {
        match self {
            Self::NonReduced { d_point: DPoint::Node, b0_contact } if *b0_contact != B0Contact::None => {
                Err(BranchError::InvalidConfig(*self))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BranchError {
    #[error("invalid configuration {0:?}: a node of D cannot lie on B0")]
    InvalidConfig(LocalBranchConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExceptionalShape {
    SmoothElliptic,
    CycleOfRationals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SingularityName {
    Canonical,
    EllipticGorenstein { degree: u8, exceptional: ExceptionalShape },
    NormalCrossing,
    PinchPoint,
    /// Degenerate cusp `z² = u²(v² − u^{q−2})`.
    T2qInf { q: u32 },
    /// Degenerate cusp `z² = u²v²` over a node of `D`.
    DegenerateCuspNodePair,
}

impl fmt::Display for SingularityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Canonical => f.write_str("canonical"),
            Self::EllipticGorenstein { degree, exceptional: ExceptionalShape::SmoothElliptic } => {
                write!(f, "simple elliptic of degree {degree}")
            }
            Self::EllipticGorenstein { degree, exceptional: ExceptionalShape::CycleOfRationals } => {
                write!(f, "cusp of degree {degree}")
            }
            Self::NormalCrossing => f.write_str("normal crossing"),
            Self::PinchPoint => f.write_str("pinch point"),
            Self::T2qInf { q } => write!(f, "T_{{2,{q},∞}}"),
            Self::DegenerateCuspNodePair => f.write_str("degenerate cusp z²=u²v²"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MhsEffect {
    NoEffect,
    ExceptionalCurve(CurveData),
    DoubleLocusNode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityClass {
    pub name: SingularityName,
    pub mhs_effect: MhsEffect,
}

pub const DEFAULT_CYCLE_LENGTH: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifierOptions {
    /// Number of rational curves in the exceptional cycle of a cusp.
    pub cycle_length: u32,
}

impl Default for ClassifierOptions {
    fn default() -> Self {
        Self { cycle_length: DEFAULT_CYCLE_LENGTH }
    }
}

pub fn classify(cfg: &LocalBranchConfig) -> Result<SingularityClass, BranchError> {
    classify_with(cfg, ClassifierOptions::default())
}

pub fn classify_with(
    cfg: &LocalBranchConfig,
    opts: ClassifierOptions,
) -> Result<SingularityClass, BranchError> {
    cfg.validate()?;
    let elliptic = |degree: u8, exceptional: ExceptionalShape| {
        let curve = match exceptional {
            ExceptionalShape::SmoothElliptic => CurveData::smooth("E", 1),
            ExceptionalShape::CycleOfRationals => CurveData::rational_cycle("E", opts.cycle_length),
        };
        SingularityClass {
            name: SingularityName::EllipticGorenstein { degree, exceptional },
            mhs_effect: MhsEffect::ExceptionalCurve(curve),
        }
    };
    let plain = |name| SingularityClass { name, mhs_effect: MhsEffect::NoEffect };
    let shape = |ordinary: bool| {
        if ordinary {
            ExceptionalShape::SmoothElliptic
        } else {
            ExceptionalShape::CycleOfRationals
        }
    };

    Ok(match *cfg {
        LocalBranchConfig::Isolated { kind } => match kind {
            IsolatedKind::DoublePoint | IsolatedKind::NegligibleTriple => {
                plain(SingularityName::Canonical)
            }
            IsolatedKind::OrdinaryQuadruple => elliptic(2, ExceptionalShape::SmoothElliptic),
            IsolatedKind::DegenerateQuadruple => elliptic(2, ExceptionalShape::CycleOfRationals),
            IsolatedKind::TriplePlusInfNearTriple { ordinary } => elliptic(1, shape(ordinary)),
        },
        LocalBranchConfig::NonReduced { d_point: DPoint::SmoothPoint, b0_contact } => match b0_contact {
            B0Contact::None => plain(SingularityName::NormalCrossing),
            B0Contact::Transverse => plain(SingularityName::PinchPoint),
            B0Contact::Tangent { n } => SingularityClass {
                name: SingularityName::T2qInf { q: n + 3 },
                mhs_effect: MhsEffect::DoubleLocusNode,
            },
        },
        LocalBranchConfig::NonReduced { d_point: DPoint::Node, .. } => SingularityClass {
            name: SingularityName::DegenerateCuspNodePair,
            mhs_effect: MhsEffect::DoubleLocusNode,
        },
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EffectSummary {
    pub exceptional: Vec<CurveData>,
    pub double_locus_nodes: u32,
}

pub fn mhs_effect_summary(configs: &[LocalBranchConfig]) -> Result<EffectSummary, BranchError> {
    mhs_effect_summary_with(configs, ClassifierOptions::default())
}

pub fn mhs_effect_summary_with(
    configs: &[LocalBranchConfig],
    opts: ClassifierOptions,
) -> Result<EffectSummary, BranchError> {
    let mut out = EffectSummary::default();
    for cfg in configs {
        match classify_with(cfg, opts)?.mhs_effect {
            MhsEffect::NoEffect => {}
            MhsEffect::ExceptionalCurve(c) => out.exceptional.push(c),
            MhsEffect::DoubleLocusNode => out.double_locus_nodes += 1,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::curve_h1;
    use crate::mhs::BigradedDims;

    fn iso(kind: IsolatedKind) -> LocalBranchConfig {
        LocalBranchConfig::isolated(kind)
    }

    #[test]
    fn quadruple_points() {
        let c = classify(&iso(IsolatedKind::OrdinaryQuadruple)).unwrap();
        assert_eq!(
            c.name,
            SingularityName::EllipticGorenstein { degree: 2, exceptional: ExceptionalShape::SmoothElliptic }
        );
        let MhsEffect::ExceptionalCurve(e) = c.mhs_effect else { panic!() };
        assert_eq!(curve_h1(&e), BigradedDims::weight_one(1));

        let c = classify(&iso(IsolatedKind::DegenerateQuadruple)).unwrap();
        let MhsEffect::ExceptionalCurve(e) = c.mhs_effect else { panic!() };
        assert_eq!(curve_h1(&e), BigradedDims::weight_zero(1));
        assert_eq!(e.components().len(), 2);
    }

    #[test]
    fn triple_triple_points_are_degree_one() {
        let c = classify(&iso(IsolatedKind::TriplePlusInfNearTriple { ordinary: true })).unwrap();
        assert_eq!(
            c.name,
            SingularityName::EllipticGorenstein { degree: 1, exceptional: ExceptionalShape::SmoothElliptic }
        );
        let c = classify(&iso(IsolatedKind::TriplePlusInfNearTriple { ordinary: false })).unwrap();
        assert_eq!(
            c.name,
            SingularityName::EllipticGorenstein { degree: 1, exceptional: ExceptionalShape::CycleOfRationals }
        );
    }

    #[test]
    fn negligible_points() {
        for k in [IsolatedKind::DoublePoint, IsolatedKind::NegligibleTriple] {
            let c = classify(&iso(k)).unwrap();
            assert_eq!(c.name, SingularityName::Canonical);
            assert_eq!(c.mhs_effect, MhsEffect::NoEffect);
        }
    }

    #[test]
    fn double_locus_points() {
        let nr = |b0_contact| LocalBranchConfig::NonReduced { d_point: DPoint::SmoothPoint, b0_contact };
        assert_eq!(classify(&nr(B0Contact::None)).unwrap().name, SingularityName::NormalCrossing);
        let pinch = classify(&nr(B0Contact::Transverse)).unwrap();
        assert_eq!(pinch.name, SingularityName::PinchPoint);
        assert_eq!(pinch.mhs_effect, MhsEffect::NoEffect);
        let t = classify(&LocalBranchConfig::tangency(0)).unwrap();
        assert_eq!(t.name, SingularityName::T2qInf { q: 3 });
        assert_eq!(t.mhs_effect, MhsEffect::DoubleLocusNode);
        assert_eq!(classify(&LocalBranchConfig::tangency(4)).unwrap().name, SingularityName::T2qInf { q: 7 });
        assert_eq!(
            classify(&LocalBranchConfig::d_node()).unwrap().name,
            SingularityName::DegenerateCuspNodePair
        );
    }

    #[test]
    fn node_on_b0_rejected() {
        let bad = LocalBranchConfig::NonReduced { d_point: DPoint::Node, b0_contact: B0Contact::Transverse };
        assert_eq!(classify(&bad), Err(BranchError::InvalidConfig(bad)));
    }

    #[test]
    fn summaries() {
        let s = mhs_effect_summary(&[
            iso(IsolatedKind::OrdinaryQuadruple),
            iso(IsolatedKind::OrdinaryQuadruple),
        ])
        .unwrap();
        assert_eq!(s.exceptional.len(), 2);
        assert!(s.exceptional.iter().all(|e| e.normalization_genus() == 1));
        assert_eq!(mhs_effect_summary(&[]).unwrap(), EffectSummary::default());
        let s = mhs_effect_summary(&[LocalBranchConfig::tangency(0)]).unwrap();
        assert_eq!((s.exceptional.len(), s.double_locus_nodes), (0, 1));
    }

    #[test]
    fn cycle_length_is_configurable() {
        let opts = ClassifierOptions { cycle_length: 5 };
        let c = classify_with(&iso(IsolatedKind::DegenerateQuadruple), opts).unwrap();
        let MhsEffect::ExceptionalCurve(e) = c.mhs_effect else { panic!() };
        assert_eq!(e.components().len(), 5);
        assert_eq!(curve_h1(&e), BigradedDims::weight_zero(1));
    }

    #[test]
    fn config_json() {
        let cfg = LocalBranchConfig::tangency(1);
        let s = serde_json::to_string(&cfg).unwrap();
        assert_eq!(s, r#"{"NonReduced":{"d_point":"SmoothPoint","b0_contact":{"Tangent":{"n":1}}}}"#);
        assert_eq!(serde_json::from_str::<LocalBranchConfig>(&s).unwrap(), cfg);
    }
}
