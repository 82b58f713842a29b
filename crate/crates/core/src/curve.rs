//! Nodal curves: their first cohomology, double covers, and curves on the
//! quadric cone `P(1,1,2)`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use petgraph::algo::connected_components;
use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chase::ExactSequenceProblem;
use crate::mhs::BigradedDims;
use crate::wps::WeightedPlane;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("duplicate component label {0:?}")]
    DuplicateLabel(String),
    #[error("node references unknown component {0:?}")]
    UnknownComponent(String),
    #[error("branch point count {0} is odd")]
    OddBranchCount(u32),
    #[error("unbranched double cover: declare whether it is split or connected")]
    SplitCoverAmbiguity,
    #[error("a branched double cover cannot be split")]
    SplitWithBranching,
    #[error("no connected unbranched double cover of a rational curve")]
    ImpossibleCover,
    #[error("curve degree must be at least 1, got {0}")]
    InvalidDegree(i64),
    #[error("adjunction gives non-integral genus {0}")]
    NonIntegerGenus(Rational64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveComponent {
    pub label: String,
    pub genus: u32,
}

/// A nodal curve given by its components (genus of each normalization)
/// and its nodes, as pairs of component labels. A loop is a node on a
/// single component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCurve", into = "RawCurve")]
pub struct CurveData {
    components: Vec<CurveComponent>,
    nodes: Vec<(String, String)>,
}

#[derive(Serialize, Deserialize)]
struct RawCurve {
    components: Vec<CurveComponent>,
    #[serde(default)]
    nodes: Vec<(String, String)>,
}

impl TryFrom<RawCurve> for CurveData {
    type Error = CurveError;
    fn try_from(raw: RawCurve) -> Result<Self, Self::Error> {
        CurveData::new(raw.components, raw.nodes)
    }
}

impl From<CurveData> for RawCurve {
    fn from(c: CurveData) -> Self {
        RawCurve { components: c.components, nodes: c.nodes }
    }
}

impl CurveData {
    pub fn new(
        components: Vec<CurveComponent>,
        nodes: Vec<(String, String)>,
    ) -> Result<Self, CurveError> {
        let mut seen = BTreeSet::new();
        for c in &components {
            if !seen.insert(c.label.as_str()) {
                return Err(CurveError::DuplicateLabel(c.label.clone()));
            }
        }
        for (a, b) in &nodes {
            for end in [a, b] {
                if !seen.contains(end.as_str()) {
                    return Err(CurveError::UnknownComponent(end.clone()));
                }
            }
        }
        Ok(Self { components, nodes })
    }

    /// An irreducible curve whose normalization has genus `genus`, with
    /// `nodes` self-nodes.
    pub fn irreducible(label: &str, genus: u32, nodes: u32) -> Self {
        Self {
            components: vec![CurveComponent { label: label.to_string(), genus }],
            nodes: (0..nodes).map(|_| (label.to_string(), label.to_string())).collect(),
        }
    }

    pub fn smooth(label: &str, genus: u32) -> Self {
        Self::irreducible(label, genus, 0)
    }

    /// A cycle of `length ≥ 1` smooth rational curves.
    pub fn rational_cycle(prefix: &str, length: u32) -> Self {
        assert!(length >= 1, "cycle length must be positive");
        let labels: Vec<String> = (1..=length).map(|i| format!("{prefix}{i}")).collect();
        let nodes = (0..labels.len())
            .map(|i| (labels[i].clone(), labels[(i + 1) % labels.len()].clone()))
            .collect();
        Self {
            components: labels.into_iter().map(|label| CurveComponent { label, genus: 0 }).collect(),
            nodes,
        }
    }

    /// Disjoint union; labels of `other` are prefixed to stay unique.
    pub fn disjoint_union(&self, other: &CurveData, prefix: &str) -> Self {
        let rename = |l: &str| format!("{prefix}{l}");
        let mut out = self.clone();
        out.components.extend(other.components.iter().map(|c| CurveComponent {
            label: rename(&c.label),
            genus: c.genus,
        }));
        out.nodes
            .extend(other.nodes.iter().map(|(a, b)| (rename(a), rename(b))));
        out
    }

    pub fn components(&self) -> &[CurveComponent] {
        &self.components
    }

    pub fn nodes(&self) -> &[(String, String)] {
        &self.nodes
    }

    pub fn node_count(&self) -> u32 {
        self.nodes.len() as u32
    }

    /// Σ of the genera of the components of the normalization.
    pub fn normalization_genus(&self) -> u32 {
        self.components.iter().map(|c| c.genus).sum()
    }

    pub fn connected_components(&self) -> u32 {
        let mut graph = UnGraph::<(), ()>::new_undirected();
        let index: BTreeMap<&str, _> = self
            .components
            .iter()
            .map(|c| (c.label.as_str(), graph.add_node(())))
            .collect();
        for (a, b) in &self.nodes {
            graph.add_edge(index[a.as_str()], index[b.as_str()], ());
        }
        connected_components(&graph) as u32
    }

    /// First Betti number of the dual graph.
    pub fn dual_graph_betti(&self) -> u32 {
        self.node_count() + self.connected_components() - self.components.len() as u32
    }

    /// Arithmetic genus of a connected curve, `g(C^ν) + b_1(dual graph)`.
    pub fn arithmetic_genus(&self) -> u32 {
        self.normalization_genus() + self.dual_graph_betti()
    }

    /// `χ(O_C) = Σ (1 - g_i) - #nodes`.
    pub fn chi(&self) -> i64 {
        self.components
            .iter()
            .map(|c| 1 - i64::from(c.genus))
            .sum::<i64>()
            - i64::from(self.node_count())
    }

    /// The normalization sequence of a nodal curve,
    ///
    /// `0 → H⁰(C) → H⁰(C^ν) ⊕ ⊕H⁰(q_i) → ⊕H⁰(ν⁻¹q_i) → H¹(C) → ⊕H¹(C^ν_i) → 0`,
    ///
    /// with `H¹(C)` left unknown.
    pub fn normalization_sequence(&self) -> ExactSequenceProblem {
        let nodes = self.node_count();
        let comps = self.components.len() as u32;
        ExactSequenceProblem::new()
            .known("H0(C)", BigradedDims::weight_zero(self.connected_components()))
            .known("H0(Cnu)+H0(nodes)", BigradedDims::weight_zero(comps + nodes))
            .known("H0(preimages of nodes)", BigradedDims::weight_zero(2 * nodes))
            .unknown("H1(C)")
            .known("H1(Cnu)", BigradedDims::weight_one(self.normalization_genus()))
    }
}

/// Deligne splitting of `H¹` of a nodal curve: the weight-1 part is the
/// cohomology of the normalization, the weight-0 part has the dimension
/// of the first Betti number of the dual graph.
pub fn curve_h1(c: &CurveData) -> BigradedDims {
    BigradedDims::weight_one(c.normalization_genus()).with(0, 0, c.dual_graph_betti())
}

/// How an unbranched double cover is declared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Splitting {
    Split,
    Connected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleCover {
    Connected { genus: u32 },
    /// Two disjoint copies of the base.
    Split { genus_each: u32 },
}

impl DoubleCover {
    /// Genus as written in tables: `g` or `g + g`.
    pub fn genus_label(self) -> String {
        match self {
            Self::Connected { genus } => genus.to_string(),
            Self::Split { genus_each } => format!("{genus_each}+{genus_each}"),
        }
    }

    /// `χ(O)` of the cover.
    pub fn chi(self) -> i64 {
        match self {
            Self::Connected { genus } => 1 - i64::from(genus),
            Self::Split { genus_each } => 2 * (1 - i64::from(genus_each)),
        }
    }
}

/// Riemann–Hurwitz for a double cover of a smooth curve of genus `g_base`
/// branched in `branch_points` points: `2g - 2 = 2(2 g_base - 2) + b`.
pub fn riemann_hurwitz_double(
    g_base: u32,
    branch_points: u32,
    splitting: Option<Splitting>,
) -> Result<DoubleCover, CurveError> {
    if branch_points % 2 == 1 {
        return Err(CurveError::OddBranchCount(branch_points));
    }
    if branch_points == 0 {
        match splitting {
            None => return Err(CurveError::SplitCoverAmbiguity),
            Some(Splitting::Split) => return Ok(DoubleCover::Split { genus_each: g_base }),
            Some(Splitting::Connected) if g_base == 0 => return Err(CurveError::ImpossibleCover),
            Some(Splitting::Connected) => {}
        }
    } else if splitting == Some(Splitting::Split) {
        return Err(CurveError::SplitWithBranching);
    }
    Ok(DoubleCover::Connected { genus: 2 * g_base + branch_points / 2 - 1 })
}

/// Genus of a quasi-smooth curve of weighted degree `m` on `P(1,1,2)`,
/// from `2g - 2 = m(m-4)/2 - ε` with `ε = 1/2` when the curve passes
/// through the vertex (`m` odd).
pub fn wps_curve_genus(m: i64) -> Result<u32, CurveError> {
    if m < 1 {
        return Err(CurveError::InvalidDegree(m));
    }
    let vertex = if m % 2 == 1 { Rational64::new(1, 2) } else { Rational64::from(0) };
    let two_g_minus_two = Rational64::new(m * (m - 4), 2) - vertex;
    let g = (two_g_minus_two + 2) / 2;
    if !g.is_integer() || g < Rational64::from(0) {
        return Err(CurveError::NonIntegerGenus(g));
    }
    Ok(g.to_integer() as u32)
}

/// Total intersection number of two curves of degrees `deg_a`, `deg_b`
/// on `P(1,1,2)`.
pub fn intersection_count(deg_a: i64, deg_b: i64) -> Rational64 {
    Rational64::from(deg_a * deg_b) * WeightedPlane::QUADRIC_CONE.o1_square()
}
