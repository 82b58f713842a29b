use ihodge::mhs::{build_poset, HodgeType};
use ihodge::scenario::{
    compute, evaluate, realization_report, verify_chain, Catalog, DegenerationChain, ScenarioError,
    ScenarioFile, BUNDLED_FILES,
};

fn ht(r: u32, s: u32) -> HodgeType {
    HodgeType::new(r, s).unwrap()
}

#[test]
fn every_scenario_meets_its_expectation() {
    let catalog = Catalog::bundled();
    assert!(catalog.scenarios().len() >= 40);
    for (s, result) in catalog.evaluate_all() {
        let ev = result.unwrap_or_else(|e| panic!("{}: {e}", s.id));
        assert!(s.expected.is_some(), "{} has no expectation", s.id);
        if let Some(report) = &ev.triple {
            assert!(report.passed(), "{}: {report}", s.id);
        }
    }
}

#[test]
fn every_chain_is_monotone() {
    let catalog = Catalog::bundled();
    for chain in catalog.chains() {
        verify_chain(&catalog, chain).unwrap_or_else(|e| panic!("{e}"));
    }
}

#[test]
fn assembled_sequences_have_vanishing_alternating_sums() {
    for (s, result) in Catalog::bundled().evaluate_all() {
        for seq in result.unwrap().sequences {
            for (pq, sum) in seq.alternating_sums() {
                assert_eq!(sum, Some(0), "{} {} slot {pq:?}", s.id, seq.name);
            }
            for i in 0..seq.problem.terms.len() {
                let dims = seq.solution.term_dims(i).expect("all terms determined");
                assert!(dims.is_symmetric(), "{} {}", s.id, seq.name);
            }
        }
    }
}

#[test]
fn realization_on_full_and_normal_catalogs() {
    let catalog = Catalog::bundled();
    for c in [catalog.clone(), catalog.normal_only()] {
        let report = realization_report(&c).unwrap();
        assert_eq!(report.types.len(), 6);
        assert_eq!(report.edges.len(), build_poset().covers.len());
    }
    assert!(catalog.normal_only().scenarios().iter().all(|s| s.is_normal()));
}

#[test]
fn empty_catalog_misses_every_type() {
    match realization_report(&Catalog::empty()) {
        Err(ScenarioError::MissingType(ts)) => assert_eq!(ts.len(), 6),
        other => panic!("{other:?}"),
    }
}

#[test]
fn dropping_a_chain_scenario_drops_the_chain() {
    let catalog = Catalog::bundled();
    let without = catalog.retain(|s| s.id != "cone-cusp");
    assert!(without.chains().iter().all(|c| !c.scenario_ids.iter().any(|id| id == "cone-cusp")));
    assert!(without.chains().len() < catalog.chains().len());
}

#[test]
fn missing_edge_is_reported() {
    let scenarios = Catalog::bundled().scenarios().to_vec();
    let no_chains = Catalog::from_files(vec![ScenarioFile { scenarios, chains: Vec::new() }]).unwrap();
    match realization_report(&no_chains) {
        Err(ScenarioError::MissingEdge(edges)) => assert_eq!(edges, build_poset().covers),
        other => panic!("{other:?}"),
    }
    let catalog = Catalog::bundled().retain(|s| s.id != "cone-cusp" && !s.id.starts_with("two-k3-b1-cusp"));
    let catalog = catalog.retain(|s| !["cover-d1-tan1", "k3-rational-nodal"].contains(&s.id.as_str()));
    match realization_report(&catalog) {
        Err(ScenarioError::MissingType(ts)) => assert_eq!(ts, vec![ht(1, 0)]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn named_examples() {
    let catalog = Catalog::bundled();
    let t = |id: &str| evaluate(catalog.get(id).unwrap()).unwrap().hodge_type;
    assert_eq!(t("two-k3-generic"), ht(0, 0));
    assert_eq!(t("k3-rational-generic"), ht(0, 1));
    assert_eq!(t("k3-rational-nodal"), ht(1, 0));
    assert_eq!(t("cone18-two-nodes"), ht(2, 0));
    let normal = ["cone-general", "cone-elliptic", "cone-cusp", "cone-two-elliptic", "cone-elliptic-cusp", "cone-two-cusps"];
    let types: Vec<_> = normal.iter().map(|id| t(id)).collect();
    assert_eq!(types, vec![ht(0, 0), ht(0, 1), ht(1, 0), ht(0, 2), ht(1, 1), ht(2, 0)]);
}

#[test]
fn chain_checks() {
    let catalog = Catalog::bundled();
    let chain = |ids: &[&str]| DegenerationChain {
        id: "test".into(),
        scenario_ids: ids.iter().map(|s| s.to_string()).collect(),
        citation: String::new(),
    };
    let single = verify_chain(&catalog, &chain(&["cone-cusp"])).unwrap();
    assert_eq!(single.realized.len(), 1);
    match verify_chain(&catalog, &chain(&["cone-two-cusps", "cone-general"])) {
        Err(ScenarioError::NonMonotoneChain { from, to, .. }) => assert_eq!((from, to), (ht(2, 0), ht(0, 0))),
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        verify_chain(&catalog, &chain(&["no-such-id"])),
        Err(ScenarioError::UnknownScenario(_))
    ));
}

#[test]
fn bundled_files_round_trip() {
    for (name, text) in BUNDLED_FILES {
        let file: ScenarioFile = serde_json::from_str(text).unwrap();
        let again: ScenarioFile = serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(file, again, "{name}");
    }
}

#[test]
fn blanking_a_known_term_recovers_it() {
    let mut recovered = 0;
    for (s, result) in Catalog::bundled().evaluate_all() {
        for seq in result.unwrap().sequences {
            let target = seq.problem.unknown_index().unwrap();
            for (i, term) in seq.problem.terms.iter().enumerate() {
                let Some(dims) = term.dims() else { continue };
                if i == target {
                    continue;
                }
                let mut p = seq.problem.replace(i, ihodge::chase::SequenceTerm::Unknown { label: term.label().into() });
                p = p.replace(target, ihodge::chase::SequenceTerm::Known {
                    label: seq.problem.terms[target].label().into(),
                    dims: seq.solution.unknown.clone(),
                });
                match ihodge::chase::solve(&p) {
                    Ok(found) => {
                        assert_eq!(&found, dims, "{} {} term {i}", s.id, seq.name);
                        recovered += 1;
                    }
                    Err(ihodge::chase::ChaseError::Underdetermined { .. }) => {}
                    Err(e) => panic!("{} {} term {i}: {e}", s.id, seq.name),
                }
            }
        }
    }
    assert!(recovered > 100, "only {recovered} terms recovered");
}

#[test]
fn scenario_kind_cover_matches_builder() {
    let catalog = Catalog::bundled();
    for d in 1..=5u32 {
        let built = ihodge::scenario::build_nonnormal_cover(d).unwrap();
        let listed = catalog.get(&format!("cover-d{d}")).unwrap();
        assert_eq!(compute(&built.scenario).unwrap().h2, compute(listed).unwrap().h2);
    }
}
