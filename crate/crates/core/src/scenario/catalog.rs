//! Scenario collections, degeneration chains and the realization check.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{compute, Evaluation, Scenario, ScenarioError, CoverTableRow};
use crate::mhs::{build_poset, polarized_leq, HodgeType};

/// The bundled catalog, as `(file name, JSON)` pairs.
pub const BUNDLED_FILES: &[(&str, &str)] = &[
    ("normal.json", include_str!("../../catalog/normal.json")),
    ("strata.json", include_str!("../../catalog/strata.json")),
    ("cone_covers.json", include_str!("../../catalog/cone_covers.json")),
    ("two_k3.json", include_str!("../../catalog/two_k3.json")),
    ("cone18.json", include_str!("../../catalog/cone18.json")),
];

/// Expected rows of the table of general cone covers.
pub const COVER_TABLE_EXPECTED: &str = include_str!("../../catalog/cover_table.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationChain {
    pub id: String,
    pub scenario_ids: Vec<String>,
    #[serde(default)]
    pub citation: String,
}

/// On-disk form of a catalog file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioFile {
    #[serde(default)]
    pub scenarios: Vec<Scenario>,
    #[serde(default)]
    pub chains: Vec<DegenerationChain>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("duplicate {what} id {id:?}")]
    DuplicateId { what: &'static str, id: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    scenarios: Vec<Scenario>,
    chains: Vec<DegenerationChain>,
}

impl Catalog {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn bundled() -> Self {
        let files = BUNDLED_FILES
            .iter()
            .map(|(name, text)| {
                serde_json::from_str::<ScenarioFile>(text)
                    .unwrap_or_else(|e| panic!("bundled catalog file {name} is invalid: {e}"))
            })
            .collect();
        Self::from_files(files).expect("bundled catalog ids are unique")
    }

    pub fn from_files(files: Vec<ScenarioFile>) -> Result<Self, LoadError> {
        let mut out = Self::default();
        for f in files {
            for s in f.scenarios {
                if out.get(&s.id).is_some() {
                    return Err(LoadError::DuplicateId { what: "scenario", id: s.id });
                }
                out.scenarios.push(s);
            }
            for c in f.chains {
                if out.chain(&c.id).is_some() {
                    return Err(LoadError::DuplicateId { what: "chain", id: c.id });
                }
                out.chains.push(c);
            }
        }
        Ok(out)
    }

    /// Reads every `*.json` file of `dir`, in file-name order.
    pub fn from_dir(dir: &Path) -> Result<Self, LoadError> {
        fn io(path: &Path) -> impl FnOnce(std::io::Error) -> LoadError + '_ {
            move |source| LoadError::Io { path: path.to_path_buf(), source }
        }
        let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
            .map_err(io(dir))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let mut files = Vec::new();
        for path in paths {
            let text = std::fs::read_to_string(&path).map_err(io(&path))?;
            let file = serde_json::from_str(&text).map_err(|source| LoadError::Json { path: path.clone(), source })?;
            files.push(file);
        }
        Self::from_files(files)
    }

    /// Entries of `other` replace same-id entries here; new ones are appended.
    pub fn overlay(mut self, other: Catalog) -> Self {
        for s in other.scenarios {
            match self.scenarios.iter_mut().find(|x| x.id == s.id) {
                Some(slot) => *slot = s,
                None => self.scenarios.push(s),
            }
        }
        for c in other.chains {
            match self.chains.iter_mut().find(|x| x.id == c.id) {
                Some(slot) => *slot = c,
                None => self.chains.push(c),
            }
        }
        self
    }

    pub fn scenarios(&self) -> &[Scenario] {
        &self.scenarios
    }

    pub fn chains(&self) -> &[DegenerationChain] {
        &self.chains
    }

    pub fn get(&self, id: &str) -> Option<&Scenario> {
        self.scenarios.iter().find(|s| s.id == id)
    }

    pub fn chain(&self, id: &str) -> Option<&DegenerationChain> {
        self.chains.iter().find(|c| c.id == id)
    }

    /// Keeps the scenarios satisfying `keep` and the chains that only use them.
    pub fn retain(&self, keep: impl Fn(&Scenario) -> bool) -> Self {
        let scenarios: Vec<Scenario> = self.scenarios.iter().filter(|s| keep(s)).cloned().collect();
        let ids: BTreeSet<&str> = scenarios.iter().map(|s| s.id.as_str()).collect();
        let chains = self
            .chains
            .iter()
            .filter(|c| c.scenario_ids.iter().all(|id| ids.contains(id.as_str())))
            .cloned()
            .collect();
        Self { scenarios, chains }
    }

    pub fn normal_only(&self) -> Self {
        self.retain(Scenario::is_normal)
    }

    /// Evaluates every scenario with its expectation, in catalog order.
    pub fn evaluate_all(&self) -> Vec<(&Scenario, Result<Evaluation, ScenarioError>)> {
        self.scenarios.iter().map(|s| (s, super::evaluate(s))).collect()
    }

    pub fn to_file(&self) -> ScenarioFile {
        ScenarioFile { scenarios: self.scenarios.clone(), chains: self.chains.clone() }
    }
}

pub fn cover_table_expected() -> Vec<CoverTableRow> {
    serde_json::from_str(COVER_TABLE_EXPECTED).expect("bundled table rows are valid")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub chain_id: String,
    pub steps: Vec<(String, HodgeType)>,
    pub realized: BTreeSet<HodgeType>,
}

fn computed_type(catalog: &Catalog, id: &str) -> Result<HodgeType, ScenarioError> {
    let s = catalog.get(id).ok_or_else(|| ScenarioError::UnknownScenario(id.to_string()))?;
    compute(s)
        .map(|ev| ev.hodge_type)
        .map_err(|e| ScenarioError::Evaluation { id: id.to_string(), source: Box::new(e) })
}

pub fn verify_chain(catalog: &Catalog, chain: &DegenerationChain) -> Result<ChainReport, ScenarioError> {
    let steps = chain
        .scenario_ids
        .iter()
        .map(|id| Ok((id.clone(), computed_type(catalog, id)?)))
        .collect::<Result<Vec<_>, ScenarioError>>()?;
    for w in steps.windows(2) {
        let ((from_id, from), (to_id, to)) = (&w[0], &w[1]);
        if !polarized_leq(*from, *to) {
            return Err(ScenarioError::NonMonotoneChain {
                chain: chain.id.clone(),
                from_id: from_id.clone(),
                from: *from,
                to_id: to_id.clone(),
                to: *to,
            });
        }
    }
    let realized = steps.iter().map(|(_, t)| *t).collect();
    Ok(ChainReport { chain_id: chain.id.clone(), steps, realized })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWitness {
    pub from: HodgeType,
    pub to: HodgeType,
    pub chain_id: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    pub types: BTreeSet<HodgeType>,
    /// One witness per cover edge, in poset order.
    pub edges: Vec<EdgeWitness>,
}

/// Checks that the catalog realizes every type, and every cover edge by
/// two consecutive scenarios of some chain.
pub fn realization_report(catalog: &Catalog) -> Result<RealizationReport, ScenarioError> {
    let mut types = BTreeSet::new();
    for s in catalog.scenarios() {
        types.insert(computed_type(catalog, &s.id)?);
    }
    let poset = build_poset();
    let missing: Vec<HodgeType> = poset.elements.iter().copied().filter(|t| !types.contains(t)).collect();
    if !missing.is_empty() {
        return Err(ScenarioError::MissingType(missing));
    }
    let reports = catalog
        .chains()
        .iter()
        .map(|c| verify_chain(catalog, c))
        .collect::<Result<Vec<_>, _>>()?;
    let mut edges = Vec::new();
    let mut missing_edges = Vec::new();
    for &(from, to) in &poset.covers {
        let witness = reports.iter().find(|r| r.steps.windows(2).any(|w| w[0].1 == from && w[1].1 == to));
        match witness {
            Some(r) => edges.push(EdgeWitness { from, to, chain_id: r.chain_id.clone() }),
            None => missing_edges.push((from, to)),
        }
    }
    if !missing_edges.is_empty() {
        return Err(ScenarioError::MissingEdge(missing_edges));
    }
    Ok(RealizationReport { types, edges })
}
