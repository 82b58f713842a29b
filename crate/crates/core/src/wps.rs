//! Intersection arithmetic on weighted projective planes and the numeric
//! conditions on Kollár triples `(X̄, D̄, τ)` for I-surfaces.
//!
//! Everything here is exact rational arithmetic.

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedPlane {
    pub weights: (u32, u32, u32),
}

impl WeightedPlane {
    /// The quadric cone, `P(1,1,2)`.
    pub const QUADRIC_CONE: WeightedPlane = WeightedPlane { weights: (1, 1, 2) };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        assert!(a > 0 && b > 0 && c > 0, "weights must be positive");
        Self { weights: (a, b, c) }
    }

    /// `O(1)² = 1/(abc)`.
    pub fn o1_square(&self) -> Rational64 {
        let (a, b, c) = self.weights;
        Rational64::new(1, i64::from(a) * i64::from(b) * i64::from(c))
    }
}

impl fmt::Display for WeightedPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.weights;
        write!(f, "P({a},{b},{c})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WpsError {
    #[error("deg g + 2 deg d = {0}, but a quintic section of the cone needs 10")]
    DegreeMismatch(i64),
    #[error("reduced branch degree {0} is odd")]
    OddReducedDegree(i64),
}

/// `(K_X̄ + D̄)²` for the normalization of the double cover of `P(1,1,2)`
/// branched over `B = B₀ + 2D` with `deg B₀ = deg_g`, `deg D = deg_d`.
///
/// `K_X̄ + D̄ = π*O(deg_g/2 + deg_d - 4)` and pulling back doubles
/// intersection numbers.
pub fn log_canonical_square(deg_g: i64, deg_d: i64) -> Result<Rational64, WpsError> {
    if deg_g % 2 != 0 {
        return Err(WpsError::OddReducedDegree(deg_g));
    }
    if deg_g + 2 * deg_d != 10 {
        return Err(WpsError::DegreeMismatch(deg_g + 2 * deg_d));
    }
    let k = deg_g / 2 + deg_d - 4;
    Ok(Rational64::from(2 * k * k) * WeightedPlane::QUADRIC_CONE.o1_square())
}

/// `χ(D) = 3 - χ(X̄) + χ(D̄)`.
pub fn chi_condition(chi_xbar: i64, chi_dbar: i64, chi_d: i64) -> bool {
    chi_d == 3 - chi_xbar + chi_dbar
}

/// Numeric data of a triple. The lc and Diff-invariance flags are declared,
/// never derived.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleNumerics {
    pub chi_xbar: i64,
    pub chi_dbar: i64,
    pub chi_d: i64,
    pub lc_flag: bool,
    pub diff_invariant_flag: bool,
    pub log_canonical_square: Rational64,
    #[serde(default)]
    pub flag_citation: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TripleCondition {
    StablePair,
    KSquared,
    Glueing,
    Chi,
}

impl fmt::Display for TripleCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::StablePair => "stable pair condition",
            Self::KSquared => "K²-condition",
            Self::Glueing => "glueing condition",
            Self::Chi => "χ-condition",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleReport {
    pub checks: Vec<(TripleCondition, bool)>,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<TripleCondition> {
        self.checks.iter().filter(|(_, ok)| !ok).map(|(c, _)| *c).collect()
    }
}

impl fmt::Display for TripleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .checks
            .iter()
            .map(|(c, ok)| format!("{c}: {}", if *ok { "ok" } else { "FAIL" }))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

pub fn check_triple(t: &TripleNumerics) -> TripleReport {
    TripleReport {
        checks: vec![
            (TripleCondition::StablePair, t.lc_flag),
            (TripleCondition::KSquared, t.log_canonical_square == Rational64::from(1)),
            (TripleCondition::Glueing, t.diff_invariant_flag),
            (TripleCondition::Chi, chi_condition(t.chi_xbar, t.chi_dbar, t.chi_d)),
        ],
    }
}
