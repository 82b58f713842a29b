//! Componentwise dimension chasing in exact sequences of mixed Hodge
//! structures.
//!
//! Morphisms of mixed Hodge structures are strict, so an exact sequence
//! stays exact after taking any single `(p,q)` slot of the Deligne
//! splitting. The solver works one slot at a time on the linear system
//!
//! ```text
//! dim T_i = rank f_{i-1} + rank f_i,    f_{-1} = f_n = 0
//! ```
//!
//! where `f_i : T_i → T_{i+1}`. Known dimensions and rank annotations are
//! propagated until the single [`SequenceTerm::Unknown`] is determined.
//! [`SequenceTerm::Placeholder`] terms stand for groups whose dimensions
//! are not known (for instance `H^1(X)` of the surface being studied);
//! propagation only passes them through an annotated neighbouring map.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mhs::{BigradedDims, Pq};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceTerm {
    Known { label: String, dims: BigradedDims },
    /// The term being solved for. Exactly one per problem.
    Unknown { label: String },
    /// A term with unknown dimensions that is not solved for.
    Placeholder { label: String },
}

impl SequenceTerm {
    pub fn label(&self) -> &str {
        match self {
            Self::Known { label, .. } | Self::Unknown { label } | Self::Placeholder { label } => {
                label
            }
        }
    }

    pub fn dims(&self) -> Option<&BigradedDims> {
        match self {
            Self::Known { dims, .. } => Some(dims),
            _ => None,
        }
    }
}

/// Which map an annotation talks about: by position of its source term,
/// or by the label of its source term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapRef {
    Index(usize),
    From(String),
}

/// The `(p,q)` slot an annotation applies to. A single slot also covers
/// its mirror `(q,p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    All,
    Pq(u8, u8),
}

impl Component {
    fn covers(self, pq: Pq) -> bool {
        match self {
            Self::All => true,
            Self::Pq(p, q) => pq == (p, q) || pq == (q, p),
        }
    }
}

impl Serialize for Component {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Self::All => s.serialize_str("all"),
            Self::Pq(p, q) => [p, q].serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Component {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Name(String),
            Pair([u8; 2]),
        }
        match Repr::deserialize(d)? {
            Repr::Name(n) if n == "all" => Ok(Self::All),
            Repr::Name(n) => Err(serde::de::Error::custom(format!(
                "unknown component {n:?}; expected \"all\" or [p, q]"
            ))),
            Repr::Pair([p, q]) => Ok(Self::Pq(p, q)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RankRule {
    /// rank = dim of the source slot.
    Injective,
    /// rank = dim of the target slot.
    Surjective,
    Zero,
    Exact(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankAnnotation {
    pub map: MapRef,
    #[serde(default = "component_all")]
    pub component: Component,
    pub rank: RankRule,
}

fn component_all() -> Component {
    Component::All
}

impl RankAnnotation {
    pub fn new(map: MapRef, component: Component, rank: RankRule) -> Self {
        Self { map, component, rank }
    }

    /// Annotation on every slot of the map leaving the term labelled `source`.
    pub fn from_term(source: &str, rank: RankRule) -> Self {
        Self::new(MapRef::From(source.to_string()), Component::All, rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChaseError {
    #[error("problem has no unknown term")]
    NoUnknown,
    #[error("problem has {0} unknown terms; exactly one is allowed")]
    MultipleUnknowns(usize),
    #[error("invalid annotation: {0}")]
    BadAnnotation(String),
    #[error("underdetermined: cannot resolve slot ({},{}) of {label}", .pq.0, .pq.1)]
    Underdetermined { pq: Pq, label: String },
    #[error("inconsistent data in slot ({},{}): {detail}", .pq.0, .pq.1)]
    Inconsistent { pq: Pq, detail: String },
}

/// A strict exact sequence `0 → T_0 → T_1 → … → T_{n-1} → 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSequenceProblem {
    pub terms: Vec<SequenceTerm>,
    #[serde(default)]
    pub annotations: Vec<RankAnnotation>,
}

impl ExactSequenceProblem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn known(mut self, label: impl Into<String>, dims: BigradedDims) -> Self {
        self.terms.push(SequenceTerm::Known { label: label.into(), dims });
        self
    }

    pub fn unknown(mut self, label: impl Into<String>) -> Self {
        self.terms.push(SequenceTerm::Unknown { label: label.into() });
        self
    }

    pub fn placeholder(mut self, label: impl Into<String>) -> Self {
        self.terms.push(SequenceTerm::Placeholder { label: label.into() });
        self
    }

    pub fn annotate(mut self, annotation: RankAnnotation) -> Self {
        self.annotations.push(annotation);
        self
    }

    pub fn unknown_index(&self) -> Result<usize, ChaseError> {
        let idx: Vec<usize> = self
            .terms
            .iter()
            .enumerate()
            .filter(|(_, t)| matches!(t, SequenceTerm::Unknown { .. }))
            .map(|(i, _)| i)
            .collect();
        match idx.as_slice() {
            [] => Err(ChaseError::NoUnknown),
            [i] => Ok(*i),
            many => Err(ChaseError::MultipleUnknowns(many.len())),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.terms.iter().position(|t| t.label() == label)
    }

    /// Copy of the problem with term `index` replaced.
    pub fn replace(&self, index: usize, term: SequenceTerm) -> Self {
        let mut out = self.clone();
        out.terms[index] = term;
        out
    }

    /// Slots the solver looks at: the support of the known terms plus the
    /// slots named by annotations.
    pub fn components(&self) -> BTreeSet<Pq> {
        let mut set: BTreeSet<Pq> = self
            .terms
            .iter()
            .filter_map(SequenceTerm::dims)
            .flat_map(|d| d.support().collect::<Vec<_>>())
            .collect();
        for a in &self.annotations {
            if let Component::Pq(p, q) = a.component {
                set.insert((p, q));
                set.insert((q, p));
            }
        }
        set
    }

    /// Index of the source term of `map`.
    pub fn resolve_map(&self, map: &MapRef) -> Result<usize, ChaseError> {
        let n = self.terms.len();
        let source = match map {
            MapRef::Index(i) => *i,
            MapRef::From(label) => {
                let mut hits = self
                    .terms
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.label() == label)
                    .map(|(i, _)| i);
                match (hits.next(), hits.next()) {
                    (Some(i), None) => i,
                    (None, _) => {
                        return Err(ChaseError::BadAnnotation(format!("no term labelled {label:?}")))
                    }
                    _ => {
                        return Err(ChaseError::BadAnnotation(format!(
                            "label {label:?} is not unique"
                        )))
                    }
                }
            }
        };
        if source + 1 >= n {
            return Err(ChaseError::BadAnnotation(format!(
                "map index {source} out of bounds for {n} terms"
            )));
        }
        Ok(source)
    }
}

/// The chase of one `(p,q)` slot. `dims[i]` is `dim T_i`; `ranks[k]` is
/// the rank of the map into `T_k` (so `ranks[0]` and `ranks[n]` are the
/// zero padding maps).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentChase {
    pub pq: Pq,
    pub dims: Vec<Option<u32>>,
    pub ranks: Vec<Option<u32>>,
}

impl ComponentChase {
    /// `Σ (-1)^i dim T_i`, when every term is determined.
    pub fn alternating_sum(&self) -> Option<i64> {
        self.dims
            .iter()
            .enumerate()
            .try_fold(0i64, |acc, (i, d)| {
                let d = i64::from((*d)?);
                Some(if i % 2 == 0 { acc + d } else { acc - d })
            })
    }

    pub fn fully_determined(&self) -> bool {
        self.dims.iter().all(Option::is_some) && self.ranks.iter().all(Option::is_some)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub unknown: BigradedDims,
    pub components: Vec<ComponentChase>,
}

impl Solution {
    /// Dimensions of term `index` wherever they are determined.
    pub fn term_dims(&self, index: usize) -> Option<BigradedDims> {
        let mut entries = Vec::new();
        for c in &self.components {
            entries.push((c.pq, c.dims[index]?));
        }
        BigradedDims::new(entries).ok()
    }
}

/// Solves for the unknown term and returns its dimensions.
pub fn solve(problem: &ExactSequenceProblem) -> Result<BigradedDims, ChaseError> {
    solve_detailed(problem).map(|s| s.unknown)
}

/// Like [`solve`], keeping the per-slot ranks and dimensions.
pub fn solve_detailed(problem: &ExactSequenceProblem) -> Result<Solution, ChaseError> {
    let target = problem.unknown_index()?;
    let mut resolved = Vec::with_capacity(problem.annotations.len());
    for a in &problem.annotations {
        resolved.push((problem.resolve_map(&a.map)?, a.component, a.rank));
    }

    let mut components = Vec::new();
    let mut entries = Vec::new();
    for pq in problem.components() {
        let chase = chase_component(problem, &resolved, pq)?;
        match chase.dims[target] {
            Some(d) => entries.push((pq, d)),
            None => {
                return Err(ChaseError::Underdetermined {
                    pq,
                    label: problem.terms[target].label().to_string(),
                })
            }
        }
        components.push(chase);
    }
    let unknown = BigradedDims::new(entries).map_err(|e| ChaseError::Inconsistent {
        pq: (0, 0),
        detail: e.to_string(),
    })?;
    Ok(Solution { unknown, components })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    Dim(usize),
    Rank(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Dim(i) => write!(f, "dim T{i}"),
            Var::Rank(k) => write!(f, "rank f{}", *k as i64 - 1),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Relation {
    /// total = a + b
    Sum(Var, Var, Var),
    Equal(Var, Var),
    Const(Var, i64),
}

struct Store {
    dims: Vec<Option<i64>>,
    ranks: Vec<Option<i64>>,
}

impl Store {
    fn get(&self, v: Var) -> Option<i64> {
        match v {
            Var::Dim(i) => self.dims[i],
            Var::Rank(k) => self.ranks[k],
        }
    }

    fn set(&mut self, v: Var, x: i64) {
        match v {
            Var::Dim(i) => self.dims[i] = Some(x),
            Var::Rank(k) => self.ranks[k] = Some(x),
        }
    }
}

fn chase_component(
    problem: &ExactSequenceProblem,
    annotations: &[(usize, Component, RankRule)],
    pq: Pq,
) -> Result<ComponentChase, ChaseError> {
    let n = problem.terms.len();
    let mut store = Store {
        dims: problem
            .terms
            .iter()
            .map(|t| t.dims().map(|d| i64::from(d.get(pq.0, pq.1))))
            .collect(),
        ranks: vec![None; n + 1],
    };
    store.ranks[0] = Some(0);
    store.ranks[n] = Some(0);

    let mut relations: Vec<Relation> = (0..n)
        .map(|i| Relation::Sum(Var::Dim(i), Var::Rank(i), Var::Rank(i + 1)))
        .collect();
    for &(source, component, rule) in annotations {
        if !component.covers(pq) {
            continue;
        }
        let map = Var::Rank(source + 1);
        relations.push(match rule {
            RankRule::Injective => Relation::Equal(map, Var::Dim(source)),
            RankRule::Surjective => Relation::Equal(map, Var::Dim(source + 1)),
            RankRule::Zero => Relation::Const(map, 0),
            RankRule::Exact(r) => Relation::Const(map, i64::from(r)),
        });
    }

    let inconsistent = |detail: String| ChaseError::Inconsistent { pq, detail };
    loop {
        let mut progress = false;
        for rel in &relations {
            match *rel {
                Relation::Const(v, c) => {
                    if store.get(v).is_none() {
                        store.set(v, c);
                        progress = true;
                    }
                }
                Relation::Equal(a, b) => match (store.get(a), store.get(b)) {
                    (Some(x), None) => {
                        store.set(b, x);
                        progress = true;
                    }
                    (None, Some(y)) => {
                        store.set(a, y);
                        progress = true;
                    }
                    _ => {}
                },
                Relation::Sum(t, a, b) => match (store.get(t), store.get(a), store.get(b)) {
                    (None, Some(x), Some(y)) => {
                        store.set(t, x + y);
                        progress = true;
                    }
                    (Some(z), None, Some(y)) => {
                        store.set(a, z - y);
                        progress = true;
                    }
                    (Some(z), Some(x), None) => {
                        store.set(b, z - x);
                        progress = true;
                    }
                    // Both ranks are nonnegative, so a zero slot kills both maps.
                    (Some(0), None, None) => {
                        store.set(a, 0);
                        store.set(b, 0);
                        progress = true;
                    }
                    _ => {}
                },
            }
        }
        if let Some(i) = store.dims.iter().position(|d| d.is_some_and(|x| x < 0)) {
            return Err(inconsistent(format!(
                "{} would have negative dimension",
                problem.terms[i].label()
            )));
        }
        if let Some(k) = store.ranks.iter().position(|r| r.is_some_and(|x| x < 0)) {
            return Err(inconsistent(format!(
                "{} would be negative; no exact sequence has these dimensions",
                Var::Rank(k)
            )));
        }
        if !progress {
            break;
        }
    }

    for rel in &relations {
        let ok = match *rel {
            Relation::Const(v, c) => store.get(v).is_none_or(|x| x == c),
            Relation::Equal(a, b) => match (store.get(a), store.get(b)) {
                (Some(x), Some(y)) => x == y,
                _ => true,
            },
            Relation::Sum(t, a, b) => match (store.get(t), store.get(a), store.get(b)) {
                (Some(z), Some(x), Some(y)) => z == x + y,
                _ => true,
            },
        };
        if !ok {
            let detail = match *rel {
                Relation::Const(v, c) => format!("annotation requires {v} = {c}"),
                Relation::Equal(a, b) => format!("annotation requires {a} = {b}"),
                Relation::Sum(Var::Dim(i), _, _) => {
                    format!("exactness fails at {}", problem.terms[i].label())
                }
                Relation::Sum(..) => "exactness fails".to_string(),
            };
            return Err(inconsistent(detail));
        }
    }

    let to_u32 = |x: Option<i64>| x.map(|v| v as u32);
    Ok(ComponentChase {
        pq,
        dims: store.dims.into_iter().map(to_u32).collect(),
        ranks: store.ranks.into_iter().map(to_u32).collect(),
    })
}
