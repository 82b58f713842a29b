//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_rational::Rational64;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

use ihodge::chase::solve;
use ihodge::curve::{curve_h1, wps_curve_genus, CurveComponent, CurveData};
use ihodge::mhs::{build_poset, polarized_leq, BigradedDims, HodgeType};
use ihodge::scenario::{
    build_nonnormal_cover, compute, evaluate, expand_cover, realization_report, verify_chain, Catalog, CoverSpec,
    NormalizationPiece, ResolvedPiece, ScenarioKind, StandardSurface,
};
use ihodge::wps::{chi_condition, log_canonical_square};

type Outcome = Result<String, String>;

fn ht(r: u32, s: u32) -> HodgeType {
    HodgeType::new(r, s).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn computed(catalog: &Catalog, id: &str) -> Result<HodgeType, String> {
    let s = catalog.get(id).ok_or_else(|| format!("missing scenario {id}"))?;
    compute(s).map(|ev| ev.hodge_type).map_err(|e| format!("{id}: {e}"))
}

fn table_triples() -> Outcome {
    let expected = [
        (2, ht(0, 2), "2", 0),
        (4, ht(0, 2), "3", 1),
        (1, ht(0, 1), "1", 0),
        (3, ht(0, 2), "2", 0),
        (5, ht(0, 2), "2+2", 2),
    ];
    let mut got = Vec::new();
    for (deg_d, t, g_dbar, g_d) in expected {
        let c = build_nonnormal_cover(deg_d).map_err(|e| e.to_string())?;
        let ev = evaluate(&c.scenario).map_err(|e| e.to_string())?;
        let triple = (ev.hodge_type, c.summary.g_dbar.clone(), c.summary.g_d);
        ensure(triple == (t, g_dbar.to_string(), g_d), || format!("d={deg_d}: got {triple:?}"))?;
        got.push(format!("({},{},{})", triple.0, triple.1, triple.2));
    }
    Ok(got.join(" "))
}

fn k_squared() -> Outcome {
    for d in 1..=5i64 {
        let k2 = log_canonical_square(10 - 2 * d, d).map_err(|e| e.to_string())?;
        ensure(k2 == Rational64::from(1), || format!("d={d}: {k2}"))?;
    }
    Ok("(K+D)² = 1 for d = 1..5".into())
}

fn chi_rows() -> Outcome {
    let mut parts = Vec::new();
    for d in [2, 4, 1, 3, 5] {
        let n = expand_cover(&CoverSpec::general(d)).map_err(|e| e.to_string())?.numerics;
        ensure(chi_condition(n.chi_xbar, n.chi_dbar, n.chi_d), || format!("d={d}: {n:?}"))?;
        parts.push(format!("({d},{}): {},{},{}", 10 - 2 * d, n.chi_xbar, n.chi_dbar, n.chi_d));
    }
    let n = expand_cover(&CoverSpec::general(5)).unwrap().numerics;
    ensure((n.chi_xbar, n.chi_dbar, n.chi_d) == (2, -2, -1), || format!("row (5,0): {n:?}"))?;
    Ok(parts.join("; "))
}

fn poset_shape() -> Outcome {
    let poset = build_poset();
    ensure(poset.elements.len() == 6, || format!("{} elements", poset.elements.len()))?;
    let edges: BTreeSet<_> = poset.covers.iter().copied().collect();
    let want: BTreeSet<_> = [
        (ht(0, 0), ht(0, 1)),
        (ht(0, 1), ht(0, 2)),
        (ht(0, 1), ht(1, 0)),
        (ht(0, 2), ht(1, 1)),
        (ht(1, 0), ht(1, 1)),
        (ht(1, 1), ht(2, 0)),
    ]
    .into();
    ensure(poset.covers.len() == 6 && edges == want, || format!("covers {:?}", poset.covers))?;
    let mut pairs = 0;
    for &a in &poset.elements {
        for &b in &poset.elements {
            ensure(poset.reaches(a, b) == polarized_leq(a, b), || format!("closure differs at {a} ≤ {b}"))?;
            pairs += 1;
        }
    }
    Ok(format!("6 elements, 6 covers, closure agrees on {pairs} pairs"))
}

fn check_types<S: AsRef<str>>(catalog: &Catalog, cases: &[(S, HodgeType)]) -> Result<(), String> {
    for (id, t) in cases {
        let (id, t) = (id.as_ref(), *t);
        let got = computed(catalog, id)?;
        ensure(got == t, || format!("{id}: expected {t}, got {got}"))?;
    }
    Ok(())
}

fn normal_cases(catalog: &Catalog) -> Outcome {
    check_types(
        catalog,
        &[
            ("cone-general", ht(0, 0)),
            ("cone-elliptic", ht(0, 1)),
            ("cone-cusp", ht(1, 0)),
            ("cone-two-elliptic", ht(0, 2)),
            ("cone-elliptic-cusp", ht(1, 1)),
            ("cone-two-cusps", ht(2, 0)),
        ],
    )?;
    let chains = [
        ("cone-elliptic-then-cusp", vec![ht(0, 0), ht(0, 1), ht(1, 0), ht(1, 1)]),
        ("cone-to-two-cusps", vec![ht(0, 0), ht(0, 1), ht(1, 0), ht(1, 1), ht(2, 0)]),
    ];
    for (id, want) in chains {
        let chain = catalog.chain(id).ok_or_else(|| format!("missing chain {id}"))?;
        let report = verify_chain(catalog, chain).map_err(|e| e.to_string())?;
        let got: Vec<HodgeType> = report.steps.iter().map(|(_, t)| *t).collect();
        ensure(got == want, || format!("{id}: {got:?}"))?;
    }
    Ok("(i)-(vi) typed; both chains monotone".into())
}

fn strata(catalog: &Catalog) -> Outcome {
    let mut cases = vec![("stratum-N1".to_string(), ht(0, 1)), ("stratum-N2".to_string(), ht(0, 1))];
    for id in ["N11E", "N11R", "N12", "N22", "N111", "N112"] {
        cases.push((format!("stratum-{id}"), ht(0, 2)));
    }
    check_types(catalog, &cases)?;
    for id in ["stratum-N112", "stratum-N111"] {
        let s = catalog.get(id).unwrap();
        let ScenarioKind::Normal { piece: NormalizationPiece::Resolved(piece) } = &s.kind else {
            return Err(format!("{id} is not a resolved normal piece"));
        };
        ensure(piece.resolution.standard == Some(StandardSurface::RuledOverElliptic), || format!("{id}: resolution"))?;
        ensure(!piece.overrides.is_empty(), || format!("{id} does not use the injectivity rule"))?;
        let mut bare = s.clone();
        bare.kind = ScenarioKind::Normal {
            piece: NormalizationPiece::Resolved(ResolvedPiece { overrides: Vec::new(), ..piece.clone() }),
        };
        ensure(compute(&bare).map(|ev| ev.hodge_type).ok() != Some(ht(0, 2)), || {
            format!("{id}: the injectivity rule has no effect")
        })?;
    }
    Ok(format!("{} strata typed", cases.len()))
}

fn wps_genera() -> Outcome {
    let got: Vec<u32> = (1..=5).map(|m| wps_curve_genus(m).unwrap()).collect();
    ensure(got == [0, 0, 0, 1, 2], || format!("{got:?}"))?;
    for k in 1..=10i64 {
        let g = i64::from(wps_curve_genus(2 * k).unwrap());
        ensure(g == (k - 1) * (k - 1), || format!("m={}: {g}", 2 * k))?;
    }
    Ok(format!("m=1..5: {got:?}; even m up to 20"))
}

fn random_curves() -> Outcome {
    let strategy = (1usize..=5).prop_flat_map(|n| {
        (
            proptest::collection::vec(0u32..=3, n),
            proptest::collection::vec((0..n, 0..n), 0..=6),
        )
    });
    let mut runner = TestRunner::deterministic();
    for case in 0..200 {
        let (genera, nodes) = strategy.new_tree(&mut runner).unwrap().current();
        let c = CurveData::new(
            genera
                .iter()
                .enumerate()
                .map(|(i, &genus)| CurveComponent { label: format!("C{i}"), genus })
                .collect(),
            nodes.iter().map(|&(a, b)| (format!("C{a}"), format!("C{b}"))).collect(),
        )
        .map_err(|e| e.to_string())?;
        let chased = solve(&c.normalization_sequence()).map_err(|e| format!("case {case}: {e}"))?;
        let direct = curve_h1(&c);
        ensure(chased == direct, || format!("case {case}: {genera:?} {nodes:?}: {chased:?} vs {direct:?}"))?;
    }
    Ok("200 curves agree".into())
}

fn families(catalog: &Catalog) -> Outcome {
    check_types(catalog, &[("two-k3-generic", ht(0, 0))])?;
    let mut types = BTreeSet::new();
    for s in catalog.scenarios().iter().filter(|s| s.id.starts_with("two-k3-")) {
        types.insert(computed(catalog, &s.id)?);
    }
    ensure(types.len() == 6, || format!("two-K3 family realizes {types:?}"))?;
    let chain = catalog.chain("cone18-nodes").ok_or("missing chain cone18-nodes")?;
    let steps: Vec<HodgeType> =
        verify_chain(catalog, chain).map_err(|e| e.to_string())?.steps.into_iter().map(|(_, t)| t).collect();
    let run = [ht(0, 2), ht(1, 1), ht(2, 0)];
    ensure(steps.windows(3).any(|w| w == run), || format!("cone18 chain {steps:?}"))?;
    check_types(catalog, &[("k3-rational-generic", ht(0, 1)), ("k3-rational-nodal", ht(1, 0))])?;
    Ok("two-K3 family: 6 types; ⟨0,2⟩→⟨1,1⟩→⟨2,0⟩; ⟨0,1⟩ and ⟨1,0⟩".into())
}

fn realization(catalog: &Catalog) -> Outcome {
    let full = realization_report(catalog).map_err(|e| format!("full: {e}"))?;
    let normal = catalog.normal_only();
    let sub = realization_report(&normal).map_err(|e| format!("normal-only: {e}"))?;
    Ok(format!(
        "full: {} types/{} edges; normal-only ({} scenarios): {} types/{} edges",
        full.types.len(),
        full.edges.len(),
        normal.scenarios().len(),
        sub.types.len(),
        sub.edges.len()
    ))
}

fn properties(catalog: &Catalog) -> Outcome {
    let mut sequences = 0;
    let mut dims = 0;
    let mut check = |d: &BigradedDims, what: &str| {
        dims += 1;
        ensure(d.is_symmetric(), || format!("{what}: asymmetric {d:?}"))
    };
    for s in catalog.scenarios() {
        let ev = compute(s).map_err(|e| format!("{}: {e}", s.id))?;
        check(&ev.h2, &s.id)?;
        for p in &ev.pieces {
            check(&p.h1, &s.id)?;
            check(&p.h2_edge, &s.id)?;
        }
        for seq in &ev.sequences {
            sequences += 1;
            for (pq, sum) in seq.alternating_sums() {
                ensure(sum == Some(0), || format!("{} {}: slot {pq:?} sums to {sum:?}", s.id, seq.name))?;
            }
            for i in 0..seq.problem.terms.len() {
                let d = seq.solution.term_dims(i).ok_or_else(|| format!("{}: term {i} open", s.id))?;
                check(&d, &s.id)?;
            }
        }
    }
    let poset = build_poset();
    let el = &poset.elements;
    for &a in el {
        ensure(polarized_leq(a, a), || format!("{a} not reflexive"))?;
        for &b in el {
            ensure(a == b || !(polarized_leq(a, b) && polarized_leq(b, a)), || format!("{a},{b} antisymmetry"))?;
            for &c in el {
                ensure(!(polarized_leq(a, b) && polarized_leq(b, c)) || polarized_leq(a, c), || {
                    format!("{a},{b},{c} transitivity")
                })?;
            }
            let strict = a != b && polarized_leq(a, b);
            let between = el.iter().any(|&m| m != a && m != b && polarized_leq(a, m) && polarized_leq(m, b));
            ensure(poset.is_cover(a, b) == (strict && !between), || format!("{a} ⋖ {b} mismatch"))?;
        }
    }
    ensure(poset.minimum() == Some(ht(0, 0)), || "no unique minimum".into())?;
    Ok(format!("{sequences} sequences, {dims} dimension vectors, poset axioms on {} triples", el.len().pow(3)))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let catalog = Catalog::bundled();
    let criteria: Vec<(&str, Outcome)> = vec![
        ("cone cover table triples", table_triples()),
        ("K²-condition", k_squared()),
        ("χ-condition", chi_rows()),
        ("Hodge type poset", poset_shape()),
        ("normal degenerations and chains", normal_cases(&catalog)),
        ("strata catalog", strata(&catalog)),
        ("weighted plane curve genera", wps_genera()),
        ("curve H¹ oracle", random_curves()),
        ("two-K3 and cone families", families(&catalog)),
        ("realization", realization(&catalog)),
        ("property suite", properties(&catalog)),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in criteria.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    let elapsed = start.elapsed();
    println!("{} passed, {failed} failed in {:.1?}", criteria.len() - failed, elapsed);
    if elapsed.as_secs_f64() >= 1.0 {
        println!("FAIL  runtime exceeds one second");
        failed += 1;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
