use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::mhs::{BigradedDims, MhsError};

/// Smooth surfaces whose low-degree cohomology is classical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardSurface {
    /// Smooth minimal surface with `K² = 1`, `p_g = 2`, `q = 0`.
    GeneralTypeI,
    K3,
    K3Blowup,
    DelPezzo(u8),
    Rational,
    ProjectivePlane,
    WeightedPlane(u32, u32, u32),
    EnriquesBlowup,
    MinimalEllipticChi2,
    RuledOverElliptic,
}

impl StandardSurface {
    pub fn profile(self) -> SurfaceProfile {
        let (h1, h2_edge, chi, citation) = match self {
            Self::GeneralTypeI => (
                BigradedDims::zero(),
                BigradedDims::zero().with(2, 0, 2),
                3,
                "p_g = 2, q = 0",
            ),
            Self::K3 | Self::K3Blowup => (
                BigradedDims::zero(),
                BigradedDims::zero().with(2, 0, 1),
                2,
                "p_g = 1, q = 0; blowing up only changes h^{1,1}",
            ),
            Self::MinimalEllipticChi2 => (
                BigradedDims::zero(),
                BigradedDims::zero().with(2, 0, 1),
                2,
                "χ = 2 and q = 0 give p_g = 1",
            ),
            Self::DelPezzo(_) | Self::Rational | Self::ProjectivePlane | Self::WeightedPlane(..) => (
                BigradedDims::zero(),
                BigradedDims::zero(),
                1,
                "rational: p_g = q = 0",
            ),
            Self::EnriquesBlowup => (
                BigradedDims::zero(),
                BigradedDims::zero(),
                1,
                "Enriques: p_g = q = 0",
            ),
            Self::RuledOverElliptic => (
                BigradedDims::weight_one(1),
                BigradedDims::zero(),
                0,
                "ruled over an elliptic curve: q = 1, p_g = 0",
            ),
        };
        SurfaceProfile {
            name: self.to_string(),
            standard: Some(self),
            h1,
            h2_edge,
            h2_pure: true,
            chi,
            citation: citation.to_string(),
        }
    }

    /// Human-readable name used in tables.
    pub fn description(self) -> String {
        match self {
            Self::GeneralTypeI => "smooth I-surface".into(),
            Self::K3 => "K3".into(),
            Self::K3Blowup => "blow up of a K3 surface".into(),
            Self::DelPezzo(d) => format!("del Pezzo of degree {d}"),
            Self::Rational => "rational surface".into(),
            Self::ProjectivePlane => "P^2".into(),
            Self::WeightedPlane(a, b, c) => format!("P({a},{b},{c})"),
            Self::EnriquesBlowup => "blow up of an Enriques surface".into(),
            Self::MinimalEllipticChi2 => "minimal elliptic surface with χ = 2".into(),
            Self::RuledOverElliptic => "ruled surface over an elliptic curve".into(),
        }
    }
}

impl fmt::Display for StandardSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::GeneralTypeI => f.write_str("GeneralTypeI"),
            Self::K3 => f.write_str("K3"),
            Self::K3Blowup => f.write_str("K3Blowup"),
            Self::DelPezzo(d) => write!(f, "DelPezzo({d})"),
            Self::Rational => f.write_str("Rational"),
            Self::ProjectivePlane => f.write_str("ProjectivePlane"),
            Self::WeightedPlane(a, b, c) => write!(f, "WeightedPlane({a},{b},{c})"),
            Self::EnriquesBlowup => f.write_str("EnriquesBlowup"),
            Self::MinimalEllipticChi2 => f.write_str("MinimalEllipticChi2"),
            Self::RuledOverElliptic => f.write_str("RuledOverElliptic"),
        }
    }
}

impl FromStr for StandardSurface {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (head, args) = match s.split_once('(') {
            Some((h, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| format!("unbalanced parentheses in {s:?}"))?;
                let nums = inner
                    .split(',')
                    .map(|x| x.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| format!("bad argument in {s:?}: {e}"))?;
                (h, nums)
            }
            None => (s, Vec::new()),
        };
        let surface = match (head, args.as_slice()) {
            ("GeneralTypeI", []) => Self::GeneralTypeI,
            ("K3", []) => Self::K3,
            ("K3Blowup", []) => Self::K3Blowup,
            ("DelPezzo", [d]) if (1..=9).contains(d) => Self::DelPezzo(*d as u8),
            ("Rational", []) => Self::Rational,
            ("ProjectivePlane", []) => Self::ProjectivePlane,
            ("WeightedPlane", [a, b, c]) if *a > 0 && *b > 0 && *c > 0 => Self::WeightedPlane(*a, *b, *c),
            ("EnriquesBlowup", []) => Self::EnriquesBlowup,
            ("MinimalEllipticChi2", []) => Self::MinimalEllipticChi2,
            ("RuledOverElliptic", []) => Self::RuledOverElliptic,
            _ => return Err(format!("unknown standard surface {s:?}")),
        };
        Ok(surface)
    }
}

/// Low-degree cohomology of a smooth piece: `H¹`, the `pq = 0` part of
/// `H²`, and `χ(O)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceProfile {
    pub name: String,
    pub standard: Option<StandardSurface>,
    pub h1: BigradedDims,
    pub h2_edge: BigradedDims,
    pub h2_pure: bool,
    pub chi: i64,
    pub citation: String,
}

impl SurfaceProfile {
    pub fn validate(&self) -> Result<(), MhsError> {
        self.h2_edge.check_surface_h2()?;
        if let Some((p, q)) = self.h2_edge.support().find(|&(p, q)| p != 0 && q != 0) {
            return Err(MhsError::NotSurfaceH2(p, q));
        }
        Ok(())
    }

    pub fn description(&self) -> String {
        self.standard.map_or_else(|| self.name.clone(), StandardSurface::description)
    }
}

impl From<StandardSurface> for SurfaceProfile {
    fn from(s: StandardSurface) -> Self {
        s.profile()
    }
}

#[derive(Serialize, Deserialize)]
struct ExplicitProfile {
    name: String,
    #[serde(default)]
    h1: BigradedDims,
    #[serde(default)]
    h2_edge: BigradedDims,
    #[serde(default = "yes")]
    h2_pure: bool,
    chi: i64,
    #[serde(default)]
    citation: String,
}

fn yes() -> bool {
    true
}

impl Serialize for SurfaceProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.standard {
            Some(std) if *self == std.profile() => s.serialize_str(&std.to_string()),
            _ => ExplicitProfile {
                name: self.name.clone(),
                h1: self.h1.clone(),
                h2_edge: self.h2_edge.clone(),
                h2_pure: self.h2_pure,
                chi: self.chi,
                citation: self.citation.clone(),
            }
            .serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for SurfaceProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Named(String),
            Explicit(ExplicitProfile),
        }
        let profile = match Repr::deserialize(d)? {
            Repr::Named(name) => name
                .parse::<StandardSurface>()
                .map_err(serde::de::Error::custom)?
                .profile(),
            Repr::Explicit(e) => SurfaceProfile {
                name: e.name,
                standard: None,
                h1: e.h1,
                h2_edge: e.h2_edge,
                h2_pure: e.h2_pure,
                chi: e.chi,
                citation: e.citation,
            },
        };
        profile.validate().map_err(serde::de::Error::custom)?;
        Ok(profile)
    }
}
