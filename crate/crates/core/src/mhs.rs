//! Hodge diamonds, Hodge types and the polarized relation between them.
//!
//! A [`BigradedDims`] records the dimensions of the Deligne splitting
//! `H^n = ⊕ H^{(p,q)}` of one cohomology group. The Hodge type of an
//! I-surface is read off from the weight-0 and weight-1 pieces of `H^2`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest Hodge index stored in a [`BigradedDims`].
pub const MAX_INDEX: u8 = 4;

/// A single `(p, q)` slot of a Deligne splitting.
pub type Pq = (u8, u8);

/// The five `(p,q)` slots of `H^2` with `pq = 0`.
pub const H2_EDGE: [Pq; 5] = [(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MhsError {
    #[error("index ({0},{1}) outside 0..={MAX_INDEX}")]
    IndexOutOfRange(u8, u8),
    #[error("dimensions are not symmetric: dim({p},{q}) = {a} but dim({q},{p}) = {b}")]
    Asymmetric { p: u8, q: u8, a: u32, b: u32 },
    #[error("malformed (p,q) key {0:?}; expected \"p,q\"")]
    BadKey(String),
    #[error("not an I-surface diamond: r + s = {r} + {s} exceeds 2")]
    NotAnIsurfaceDiamond { r: u32, s: u32 },
    #[error("entry ({0},{1}) is not allowed in the second cohomology of a surface")]
    NotSurfaceH2(u8, u8),
}

/// Dimensions `dim H^{(p,q)}` of one mixed Hodge structure.
///
/// Missing entries are zero and zero entries are never stored, so two
/// values compare equal exactly when all their dimensions agree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<String, u32>", into = "BTreeMap<String, u32>")]
pub struct BigradedDims {
    entries: BTreeMap<Pq, u32>,
}

impl BigradedDims {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds from explicit entries, checking range and `(p,q) ↔ (q,p)` symmetry.
    pub fn new<I>(entries: I) -> Result<Self, MhsError>
    where
        I: IntoIterator<Item = (Pq, u32)>,
    {
        let mut map = BTreeMap::new();
        for ((p, q), d) in entries {
            if p > MAX_INDEX || q > MAX_INDEX {
                return Err(MhsError::IndexOutOfRange(p, q));
            }
            if d > 0 {
                *map.entry((p, q)).or_insert(0) += d;
            }
        }
        for (&(p, q), &a) in &map {
            let b = map.get(&(q, p)).copied().unwrap_or(0);
            if a != b {
                return Err(MhsError::Asymmetric { p, q, a, b });
            }
        }
        Ok(Self { entries: map })
    }

    /// Sets `dim(p,q)` and its mirror `dim(q,p)` to `dim`.
    pub fn with(mut self, p: u8, q: u8, dim: u32) -> Self {
        assert!(p <= MAX_INDEX && q <= MAX_INDEX, "index ({p},{q}) out of range");
        for key in [(p, q), (q, p)] {
            if dim == 0 {
                self.entries.remove(&key);
            } else {
                self.entries.insert(key, dim);
            }
        }
        self
    }

    /// Pure Hodge structure of weight 1 with `h^{1,0} = h^{0,1} = g`.
    pub fn weight_one(g: u32) -> Self {
        Self::zero().with(1, 0, g)
    }

    /// `dim` copies of the trivial structure `(0,0)`.
    pub fn weight_zero(dim: u32) -> Self {
        Self::zero().with(0, 0, dim)
    }

    pub fn get(&self, p: u8, q: u8) -> u32 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    /// Nonzero entries in `(p,q)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Pq, u32)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = Pq> + '_ {
        self.entries.keys().copied()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries
            .iter()
            .all(|(&(p, q), &d)| self.get(q, p) == d)
    }

    /// Restriction to the slots with `pq = 0`.
    pub fn edge(&self) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(&(p, q), _)| p == 0 || q == 0)
                .map(|(&k, &v)| (k, v))
                .collect(),
        }
    }

    /// Checks that every entry is a legal slot of `H^2` of a surface.
    pub fn check_surface_h2(&self) -> Result<(), MhsError> {
        match self.entries.keys().find(|&&(p, q)| p > 2 || q > 2) {
            Some(&(p, q)) => Err(MhsError::NotSurfaceH2(p, q)),
            None => Ok(()),
        }
    }

    /// Entrywise sum.
    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            *out.entries.entry(k).or_insert(0) += v;
        }
        out
    }

    /// `n` copies of `self`.
    pub fn times(&self, n: u32) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|_| n > 0)
                .map(|(&k, &v)| (k, v * n))
                .collect(),
        }
    }
}

impl std::iter::Sum for BigradedDims {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc.plus(&x))
    }
}

impl<'a> std::iter::Sum<&'a BigradedDims> for BigradedDims {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc.plus(x))
    }
}

impl TryFrom<BTreeMap<String, u32>> for BigradedDims {
    type Error = MhsError;

    fn try_from(raw: BTreeMap<String, u32>) -> Result<Self, Self::Error> {
        let mut entries = Vec::with_capacity(raw.len());
        for (key, dim) in raw {
            entries.push((parse_pq(&key)?, dim));
        }
        Self::new(entries)
    }
}

impl From<BigradedDims> for BTreeMap<String, u32> {
    fn from(dims: BigradedDims) -> Self {
        dims.entries
            .into_iter()
            .map(|((p, q), d)| (format!("{p},{q}"), d))
            .collect()
    }
}

fn parse_pq(key: &str) -> Result<Pq, MhsError> {
    let bad = || MhsError::BadKey(key.to_string());
    let (p, q) = key.split_once(',').ok_or_else(bad)?;
    let p = p.trim().parse().map_err(|_| bad())?;
    let q = q.trim().parse().map_err(|_| bad())?;
    Ok((p, q))
}

impl fmt::Display for BigradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|((p, q), d)| format!("({p},{q}):{d}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The Hodge type `⟨r,s⟩` of an I-surface: `r = dim H^2^{(0,0)}`,
/// `s = dim H^2^{(1,0)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HodgeType {
    pub r: u32,
    pub s: u32,
}

impl HodgeType {
    pub fn new(r: u32, s: u32) -> Result<Self, MhsError> {
        if r + s > 2 {
            return Err(MhsError::NotAnIsurfaceDiamond { r, s });
        }
        Ok(Self { r, s })
    }

    /// All six admissible types, in lexicographic order.
    pub fn all() -> Vec<HodgeType> {
        (0..=2)
            .flat_map(|r| (0..=2 - r).map(move |s| HodgeType { r, s }))
            .collect()
    }

    /// Dimension of the pure weight-2 part, `h^{2,0} = 2 - r - s`.
    pub fn pure_part(self) -> u32 {
        2 - self.r - self.s
    }

    /// The `r + 2s ≤ h^{1,1}` constraint, checkable once `h^{1,1}` is known.
    pub fn fits_h11(self, h11: u32) -> bool {
        self.r + 2 * self.s <= h11
    }

    /// Node name used in DOT output, e.g. `(0,1)`.
    pub fn key(self) -> String {
        format!("({},{})", self.r, self.s)
    }
}

impl fmt::Display for HodgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{},{}⟩", self.r, self.s)
    }
}

/// Reads the Hodge type off the Deligne splitting of `H^2(X)`.
///
/// `h^{1,1}` is never consulted.
pub fn hodge_type_of(h2: &BigradedDims) -> Result<HodgeType, MhsError> {
    HodgeType::new(h2.get(0, 0), h2.get(1, 0))
}

/// `⟨r,s⟩ ≤ ⟨t,u⟩` iff `r ≤ t` and `r + s ≤ t + u`.
pub fn polarized_leq(a: HodgeType, b: HodgeType) -> bool {
    a.r <= b.r && a.r + a.s <= b.r + b.s
}

pub fn polarized_lt(a: HodgeType, b: HodgeType) -> bool {
    a != b && polarized_leq(a, b)
}

/// The degeneration diagram: the six types with their cover relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgePoset {
    pub elements: Vec<HodgeType>,
    pub covers: Vec<(HodgeType, HodgeType)>,
}

impl HodgePoset {
    pub fn minimum(&self) -> Option<HodgeType> {
        let mins: Vec<_> = self
            .elements
            .iter()
            .copied()
            .filter(|&b| !self.covers.iter().any(|&(_, t)| t == b))
            .collect();
        match mins.as_slice() {
            [only] => Some(*only),
            _ => None,
        }
    }

    /// Reflexive-transitive closure of the cover relation.
    pub fn reaches(&self, a: HodgeType, b: HodgeType) -> bool {
        if a == b {
            return true;
        }
        let mut stack = vec![a];
        let mut seen = vec![a];
        while let Some(x) = stack.pop() {
            for &(lo, hi) in &self.covers {
                if lo == x && !seen.contains(&hi) {
                    if hi == b {
                        return true;
                    }
                    seen.push(hi);
                    stack.push(hi);
                }
            }
        }
        false
    }

    pub fn is_cover(&self, a: HodgeType, b: HodgeType) -> bool {
        self.covers.contains(&(a, b))
    }

    /// Length of the longest cover chain from the minimum, used for layering.
    pub fn level(&self, t: HodgeType) -> usize {
        self.covers
            .iter()
            .filter(|&&(_, hi)| hi == t)
            .map(|&(lo, _)| self.level(lo) + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Enumerates the admissible types and derives covers from [`polarized_leq`].
pub fn build_poset() -> HodgePoset {
    let elements = HodgeType::all();
    let mut covers = Vec::new();
    for &a in &elements {
        for &b in &elements {
            if !polarized_lt(a, b) {
                continue;
            }
            let between = elements
                .iter()
                .any(|&c| polarized_lt(a, c) && polarized_lt(c, b));
            if !between {
                covers.push((a, b));
            }
        }
    }
    HodgePoset { elements, covers }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ht(r: u32, s: u32) -> HodgeType {
        HodgeType { r, s }
    }

    #[test]
    fn pure_weight_two_is_type_zero_zero() {
        let h2 = BigradedDims::zero().with(2, 0, 2).with(1, 1, 17);
        assert_eq!(hodge_type_of(&h2).unwrap(), ht(0, 0));
    }

    #[test]
    fn one_weight_one_class() {
        let h2 = BigradedDims::zero().with(1, 0, 1).with(2, 0, 1);
        assert_eq!(hodge_type_of(&h2).unwrap(), ht(0, 1));
    }

    #[test]
    fn two_weight_zero_classes() {
        let h2 = BigradedDims::weight_zero(2);
        assert_eq!(hodge_type_of(&h2).unwrap(), ht(2, 0));
    }

    #[test]
    fn too_many_degenerate_classes_rejected() {
        let h2 = BigradedDims::zero().with(0, 0, 2).with(1, 0, 1);
        assert_eq!(
            hodge_type_of(&h2),
            Err(MhsError::NotAnIsurfaceDiamond { r: 2, s: 1 })
        );
    }

    #[test]
    fn asymmetric_entries_rejected() {
        let err = BigradedDims::new([((1, 0), 1)]).unwrap_err();
        assert!(matches!(err, MhsError::Asymmetric { .. }));
        assert!(BigradedDims::new([((5, 0), 1), ((0, 5), 1)]).is_err());
    }

    #[test]
    fn surface_h2_rejects_high_indices() {
        let d = BigradedDims::zero().with(3, 0, 1);
        assert_eq!(d.check_surface_h2(), Err(MhsError::NotSurfaceH2(0, 3)));
    }

    #[test]
    fn json_uses_pq_keys() {
        let d = BigradedDims::weight_one(2).with(0, 0, 1);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"0,0":1,"0,1":2,"1,0":2}"#);
        let back: BigradedDims = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<BigradedDims>(r#"{"1,0":1}"#).is_err());
        assert!(serde_json::from_str::<BigradedDims>(r#"{"x":1}"#).is_err());
    }

    #[test]
    fn polarized_examples() {
        assert!(polarized_leq(ht(0, 1), ht(1, 0)));
        assert!(!polarized_leq(ht(0, 2), ht(1, 0)));
        assert!(!polarized_leq(ht(1, 0), ht(0, 2)));
        for a in HodgeType::all() {
            assert!(polarized_leq(a, a));
        }
    }

    #[test]
    fn poset_matches_degeneration_diagram() {
        let poset = build_poset();
        assert_eq!(poset.elements.len(), 6);
        let mut covers = poset.covers.clone();
        covers.sort();
        let mut want = vec![
            (ht(0, 0), ht(0, 1)),
            (ht(0, 1), ht(0, 2)),
            (ht(0, 1), ht(1, 0)),
            (ht(0, 2), ht(1, 1)),
            (ht(1, 0), ht(1, 1)),
            (ht(1, 1), ht(2, 0)),
        ];
        want.sort();
        assert_eq!(covers, want);
        assert_eq!(poset.minimum(), Some(ht(0, 0)));
        assert_eq!(poset.level(ht(2, 0)), 4);
    }

    #[test]
    fn poset_axioms_exhaustive() {
        let all = HodgeType::all();
        for &a in &all {
            for &b in &all {
                if polarized_leq(a, b) && polarized_leq(b, a) {
                    assert_eq!(a, b);
                }
                for &c in &all {
                    if polarized_leq(a, b) && polarized_leq(b, c) {
                        assert!(polarized_leq(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn h11_constraint() {
        assert!(ht(0, 2).fits_h11(4));
        assert!(!ht(0, 2).fits_h11(3));
    }
}
