//! The `ihodge` command line.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::mhs::{build_poset, BigradedDims};
use crate::scenario::{
    build_nonnormal_cover, evaluate, realization_report, cover_table_expected, verify_chain, Catalog, Evaluation,
    Scenario, ScenarioError, ScenarioFile, SolvedSequence, CoverTableRow,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CHASE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "ihodge", version, about = "Hodge types of degenerate I-surfaces")]
pub struct Cli {
    /// Read the catalog from this directory of JSON files instead of the bundled one.
    #[arg(long, global = true, value_name = "DIR")]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog scenarios with computed and expected types.
    Catalog,
    /// Evaluate a scenario file (one scenario or a catalog file).
    Run { path: PathBuf },
    /// Print the degeneration diagram of Hodge types.
    Poset {
        #[arg(long)]
        dot: bool,
    },
    /// Recompute the table of non-normal double covers of the quadric cone.
    Table2,
    /// Check expectations, triples, chains and the realization of every type and edge.
    VerifyAll,
    /// Print the catalog's degeneration chains.
    Chains {
        #[arg(long)]
        dot: bool,
    },
}

/// Runs the command line on `args` (program name first) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = dispatch(&cli, out, err);
    match result {
        Ok(code) => code,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn load_catalog(dir: Option<&Path>, err: &mut dyn Write) -> std::io::Result<Option<Catalog>> {
    match dir {
        None => Ok(Some(Catalog::bundled())),
        Some(d) => match Catalog::from_dir(d) {
            Ok(c) => Ok(Some(c)),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(None)
            }
        },
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<u8> {
    match &cli.command {
        Command::Poset { dot } => cmd_poset(*dot, out),
        Command::Table2 => cmd_table2(out),
        Command::Run { path } => cmd_run(path, out, err),
        Command::Catalog | Command::VerifyAll | Command::Chains { .. } => {
            let Some(catalog) = load_catalog(cli.catalog.as_deref(), err)? else {
                return Ok(EXIT_USAGE);
            };
            match &cli.command {
                Command::Catalog => cmd_catalog(&catalog, out),
                Command::VerifyAll => cmd_verify_all(&catalog, out),
                Command::Chains { dot } => cmd_chains(&catalog, *dot, out),
                _ => unreachable!(),
            }
        }
    }
}

fn status_of(e: &ScenarioError) -> u8 {
    if e.is_chase_error() {
        EXIT_CHASE
    } else {
        EXIT_FAILURE
    }
}

/// The `pq = 0` part of `H²` as a 3×3 grid, `p` upwards and `q` to the
/// right; the `(1,1)` entry is not computed.
pub fn format_diamond(h2: &BigradedDims) -> String {
    let cell = |p: u8, q: u8| if (p, q) == (1, 1) { "?".to_string() } else { h2.get(p, q).to_string() };
    let mut s = String::new();
    for p in (0..=2u8).rev() {
        s.push_str(&format!("p={p} | {:>3} {:>3} {:>3}\n", cell(p, 0), cell(p, 1), cell(p, 2)));
    }
    s.push_str("      q=0 q=1 q=2\n");
    s
}

pub fn cmd_poset(dot: bool, out: &mut dyn Write) -> std::io::Result<u8> {
    let poset = build_poset();
    if dot {
        writeln!(out, "digraph hodge_types {{")?;
        writeln!(out, "  rankdir=TB;")?;
        for t in &poset.elements {
            writeln!(out, "  \"{}\" [label=\"{t}\"];", t.key())?;
        }
        for (a, b) in &poset.covers {
            writeln!(out, "  \"{}\" -> \"{}\";", a.key(), b.key())?;
        }
        writeln!(out, "}}")?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "Hodge types ⟨r,s⟩, ⟨r,s⟩ <= ⟨t,u⟩ iff r <= t and r+s <= t+u")?;
    let max_level = poset.elements.iter().map(|&t| poset.level(t)).max().unwrap_or(0);
    for level in 0..=max_level {
        let row: Vec<String> =
            poset.elements.iter().filter(|&&t| poset.level(t) == level).map(ToString::to_string).collect();
        writeln!(out, "level {level}: {}", row.join("  "))?;
    }
    writeln!(out, "cover edges:")?;
    for (a, b) in &poset.covers {
        writeln!(out, "  {a} -> {b}")?;
    }
    if let Some(min) = poset.minimum() {
        writeln!(out, "unique source: {min}")?;
    }
    Ok(EXIT_OK)
}

fn computed_cover_table() -> Result<Vec<CoverTableRow>, ScenarioError> {
    cover_table_expected()
        .iter()
        .map(|row| {
            let built = build_nonnormal_cover(row.deg_d)?;
            let ev = evaluate(&built.scenario)?;
            Ok(CoverTableRow {
                hodge_type: ev.hodge_type,
                deg_d: built.summary.deg_d,
                deg_g: built.summary.deg_g,
                xbar: built.summary.xbar,
                g_dbar: built.summary.g_dbar,
                g_d: built.summary.g_d,
            })
        })
        .collect()
}

pub fn cmd_table2(out: &mut dyn Write) -> std::io::Result<u8> {
    let computed = match computed_cover_table() {
        Ok(rows) => rows,
        Err(e) => {
            writeln!(out, "error: {e}")?;
            return Ok(status_of(&e));
        }
    };
    writeln!(out, "Hodge type | deg d | deg g | Xbar | g(Dbar) | g(D)")?;
    for row in &computed {
        writeln!(out, "{}", row.format())?;
    }
    let mut mismatches = 0;
    for (want, got) in cover_table_expected().iter().zip(&computed) {
        if want != got {
            mismatches += 1;
            writeln!(out, "- {}", want.format())?;
            writeln!(out, "+ {}", got.format())?;
        }
    }
    if mismatches == 0 {
        writeln!(out, "all {} rows match", computed.len())?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "{mismatches} rows differ")?;
        Ok(EXIT_FAILURE)
    }
}

fn read_scenarios(path: &Path) -> Result<Vec<Scenario>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    let parsed = if value.get("scenarios").is_some() || value.get("chains").is_some() {
        serde_json::from_value::<ScenarioFile>(value).map(|f| f.scenarios)
    } else {
        serde_json::from_value::<Scenario>(value).map(|s| vec![s])
    };
    parsed.map_err(|e| format!("invalid scenario in {}: {e}", path.display()))
}

fn write_sequence(seq: &SolvedSequence, out: &mut dyn Write) -> std::io::Result<()> {
    let terms: Vec<String> = (0..seq.problem.terms.len())
        .map(|i| {
            let dims = seq.solution.term_dims(i).map_or("?".to_string(), |d| d.to_string());
            format!("{} {dims}", seq.problem.terms[i].label())
        })
        .collect();
    writeln!(out, "  {}:", seq.name)?;
    writeln!(out, "    0 -> {} -> 0", terms.join(" -> "))
}

fn write_evaluation(s: &Scenario, ev: &Evaluation, out: &mut dyn Write) -> std::io::Result<()> {
    for seq in &ev.sequences {
        write_sequence(seq, out)?;
    }
    writeln!(out, "  H2(X), pq = 0 part:")?;
    for line in format_diamond(&ev.h2).lines() {
        writeln!(out, "    {line}")?;
    }
    writeln!(out, "  Hodge type {}", ev.hodge_type)?;
    if let Some(expected) = s.expected {
        writeln!(out, "  expected {expected}: ok")?;
    }
    if let Some(report) = &ev.triple {
        writeln!(out, "  triple: {report}")?;
    }
    Ok(())
}

pub fn cmd_run(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<u8> {
    let scenarios = match read_scenarios(path) {
        Ok(s) => s,
        Err(msg) => {
            writeln!(err, "error: {msg}")?;
            return Ok(EXIT_USAGE);
        }
    };
    let mut code = EXIT_OK;
    for s in &scenarios {
        writeln!(out, "scenario {}", s.id)?;
        if !s.citation.is_empty() {
            writeln!(out, "  {}", s.citation)?;
        }
        match evaluate(s) {
            Ok(ev) => {
                write_evaluation(s, &ev, out)?;
                if ev.triple.as_ref().is_some_and(|t| !t.passed()) {
                    code = code.max(EXIT_FAILURE);
                }
            }
            Err(e) => {
                writeln!(out, "  FAIL: {e}")?;
                code = code.max(status_of(&e));
            }
        }
    }
    Ok(code)
}

pub fn cmd_catalog(catalog: &Catalog, out: &mut dyn Write) -> std::io::Result<u8> {
    let mut code = EXIT_OK;
    let width = catalog.scenarios().iter().map(|s| s.id.len()).max().unwrap_or(0);
    for (s, result) in catalog.evaluate_all() {
        let expected = s.expected.map_or("-".to_string(), |t| t.to_string());
        match result {
            Ok(ev) => writeln!(out, "{:<width$}  {}  expected {expected}  {}", s.id, ev.hodge_type, s.citation)?,
            Err(e) => {
                writeln!(out, "{:<width$}  FAIL   expected {expected}  {e}", s.id)?;
                code = code.max(status_of(&e));
            }
        }
    }
    writeln!(out, "{} scenarios, {} chains", catalog.scenarios().len(), catalog.chains().len())?;
    Ok(code)
}

pub fn cmd_verify_all(catalog: &Catalog, out: &mut dyn Write) -> std::io::Result<u8> {
    let (mut passed, mut failed) = (0usize, 0usize);
    let mut tally = |ok: bool, line: String, out: &mut dyn Write| -> std::io::Result<()> {
        if ok {
            passed += 1;
            writeln!(out, "ok   {line}")
        } else {
            failed += 1;
            writeln!(out, "FAIL {line}")
        }
    };
    for (s, result) in catalog.evaluate_all() {
        match result {
            Ok(ev) => {
                tally(true, format!("scenario {} {}", s.id, ev.hodge_type), out)?;
                if let Some(report) = ev.triple {
                    tally(report.passed(), format!("triple {}: {report}", s.id), out)?;
                }
            }
            Err(e) => tally(false, format!("scenario {}: {e}", s.id), out)?,
        }
    }
    for chain in catalog.chains() {
        match verify_chain(catalog, chain) {
            Ok(r) => {
                let types: Vec<String> = r.steps.iter().map(|(_, t)| t.to_string()).collect();
                tally(true, format!("chain {}: {}", chain.id, types.join(" -> ")), out)?;
            }
            Err(e) => tally(false, format!("chain {}: {e}", chain.id), out)?,
        }
    }
    match realization_report(catalog) {
        Ok(r) => tally(true, format!("realization: {} types, {} cover edges", r.types.len(), r.edges.len()), out)?,
        Err(e) => tally(false, format!("realization: {e}"), out)?,
    }
    writeln!(out, "passed={passed} failed={failed}")?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
}

pub fn cmd_chains(catalog: &Catalog, dot: bool, out: &mut dyn Write) -> std::io::Result<u8> {
    let mut reports = Vec::new();
    let mut code = EXIT_OK;
    for chain in catalog.chains() {
        match verify_chain(catalog, chain) {
            Ok(r) => reports.push(r),
            Err(e) => {
                writeln!(out, "{}: {e}", chain.id)?;
                code = code.max(status_of(&e));
            }
        }
    }
    if !dot {
        for r in &reports {
            let steps: Vec<String> = r.steps.iter().map(|(id, t)| format!("{id} {t}")).collect();
            writeln!(out, "{}: {}", r.chain_id, steps.join(" -> "))?;
        }
        return Ok(code);
    }
    writeln!(out, "digraph chains {{")?;
    writeln!(out, "  rankdir=LR;")?;
    let mut seen = BTreeSet::new();
    for r in &reports {
        for (id, t) in &r.steps {
            if seen.insert(id.clone()) {
                writeln!(out, "  \"{id}\" [label=\"{id}\\n{t}\"];")?;
            }
        }
    }
    let mut edges = BTreeSet::new();
    for r in &reports {
        for w in r.steps.windows(2) {
            if edges.insert((w[0].0.clone(), w[1].0.clone())) {
                writeln!(out, "  \"{}\" -> \"{}\";", w[0].0, w[1].0)?;
            }
        }
    }
    writeln!(out, "}}")?;
    Ok(code)
}
