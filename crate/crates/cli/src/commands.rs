use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::Parser;
use kc_ramsey::colorings::{
    blowup_coloring, forest_partition_coloring, mine_delta_system, random_coloring, sierpinski_coloring,
    BitstringFamily,
};
use kc_ramsey::formats::{parse_bitstrings, parse_coloring, parse_graph, parse_pair_family, write_coloring};
use kc_ramsey::sat::{assignment_from_literals, decode_model, emit_cnf, parse_model, CnfInstance};
use kc_ramsey::search::{
    arrow_check, exists_avoiding_coloring, ramsey_number, ArrowMode, RamseyValue, SearchConfig, SearchParams,
    SearchResult,
};
use kc_ramsey::{is_kappa_connected, vertex_connectivity, ConnectivityVerdict, EdgeColoring};
use serde_json::{json, Value};

use crate::store::{file_digest, outcome_digest, Store};
use crate::{Cli, ColoringKind, Command};

/// A malformed input file or argument, reported with its location.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A check ran and said no: a rejected model or a replay mismatch.
    Rejected,
    /// The search budget ran out before a verdict.
    Unknown,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Rejected => 1,
            Status::Unknown => 3,
        }
    }
}

pub struct Report {
    /// Printed to standard output.
    pub text: String,
    pub outcome: Value,
    pub status: Status,
    pub inputs: BTreeMap<String, String>,
}

impl Report {
    fn ok(text: String, outcome: Value) -> Self {
        Report {
            text,
            outcome,
            status: Status::Ok,
            inputs: BTreeMap::new(),
        }
    }
}

/// Reads and parses an input file, turning parse errors into
/// `path:line: message` diagnostics.
fn read_input<T>(
    path: &Path,
    inputs: &mut BTreeMap<String, String>,
    parse: impl FnOnce(&str) -> kc_ramsey::Result<T>,
) -> Result<T> {
    let shown = path.display();
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{shown}: {e}")))?;
    inputs.insert(shown.to_string(), file_digest(path)?);
    parse(&text).map_err(|e| {
        let msg = match e {
            kc_ramsey::Error::Parse { line, message } => format!("{shown}:{line}: {message}"),
            other => format!("{shown}: {other}"),
        };
        InputError(msg).into()
    })
}

fn emit(out: Option<&Path>, body: &str) -> Result<String> {
    match out {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("cannot write {}", path.display()))?;
            Ok(String::new())
        }
        None => Ok(body.to_string()),
    }
}

fn search_config(workers: usize, budget: Option<u64>) -> SearchConfig {
    SearchConfig { workers, budget }
}

fn join(items: &[usize]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn execute(command: &Command, seed: u64) -> Result<Report> {
    let mut inputs = BTreeMap::new();
    let mut report = match command {
        Command::Connectivity(a) => {
            let g = read_input(&a.graph, &mut inputs, parse_graph)?;
            match a.kappa {
                Some(kappa) => {
                    let verdict = is_kappa_connected(&g, kappa);
                    let mut text = format!("{}\n", verdict.holds());
                    match &verdict {
                        ConnectivityVerdict::Separated { separator } => {
                            let _ = writeln!(text, "separator: {}", join(separator));
                        }
                        ConnectivityVerdict::Connected { witness: Some(w) } => {
                            let _ = writeln!(text, "{} disjoint paths {} -> {}:", w.paths.len(), w.source, w.target);
                            for p in &w.paths {
                                let _ = writeln!(text, "  {}", join(p));
                            }
                        }
                        ConnectivityVerdict::Connected { witness: None } => {
                            text.push_str("complete graph\n");
                        }
                    }
                    Report::ok(
                        text,
                        json!({ "kappa": kappa, "holds": verdict.holds(), "verdict": verdict }),
                    )
                }
                None if g.is_complete() => Report::ok(
                    "complete (κ-connected for every κ)\n".into(),
                    json!({ "complete": true, "n": g.n() }),
                ),
                None => {
                    let k = vertex_connectivity(&g)?;
                    Report::ok(
                        format!("{k}\n"),
                        json!({ "complete": false, "n": g.n(), "vertex_connectivity": k }),
                    )
                }
            }
        }
        Command::Arrow(a) => {
            let c = read_input(&a.coloring, &mut inputs, parse_coloring)?;
            let mode = if a.at_least {
                ArrowMode::AtLeast
            } else {
                ArrowMode::Exact
            };
            let witness = arrow_check(&c, a.kappa, a.m, mode)?;
            let text = match &witness {
                None => "none\n".to_string(),
                Some(w) => format!("color {} vertices {}\n", w.color, join(&w.vertices)),
            };
            Report::ok(text, json!({ "mode": mode, "witness": witness }))
        }
        Command::Search(a) => {
            let params = SearchParams {
                n: a.n,
                m: a.m,
                kappa: a.kappa,
                k: a.colors,
            };
            let out = exists_avoiding_coloring(params, search_config(a.workers, a.budget))?;
            let status = match out.result {
                SearchResult::Unknown => Status::Unknown,
                _ => Status::Ok,
            };
            let outcome = serde_json::to_value(&out)?;
            let printed = json!({
                "params": out.params,
                "result": out.result,
                "stats": out.stats,
                "workers": out.workers,
                "seed": seed,
                "tool_version": env!("CARGO_PKG_VERSION"),
            });
            Report {
                text: format!("{}\n", serde_json::to_string_pretty(&printed)?),
                outcome,
                status,
                inputs: BTreeMap::new(),
            }
        }
        Command::Number(a) => {
            let r = ramsey_number(a.m, a.kappa, a.colors, a.nmax, search_config(a.workers, a.budget))?;
            let (text, status) = match r.value {
                RamseyValue::Exact(n) => (format!("{n}\n"), Status::Ok),
                RamseyValue::GreaterThan(n) => (format!("> {n}\n"), Status::Ok),
                RamseyValue::Unknown(n) => (format!("unknown (budget exhausted at n = {n})\n"), Status::Unknown),
            };
            Report {
                text,
                outcome: serde_json::to_value(&r)?,
                status,
                inputs: BTreeMap::new(),
            }
        }
        Command::Coloring(a) => {
            let (c, out) = match &a.kind {
                ColoringKind::Sierpinski(s) => {
                    let family = match (&s.strings, s.lambda) {
                        (Some(path), _) => read_input(path, &mut inputs, parse_bitstrings)?,
                        (None, Some(lambda)) if lambda > 16 => {
                            return Err(InputError(format!("lambda = {lambda} is too large (at most 16)")).into())
                        }
                        (None, Some(lambda)) if s.shuffle => BitstringFamily::full_shuffled(lambda, seed),
                        (None, Some(lambda)) => BitstringFamily::full(lambda),
                        (None, None) => bail!(InputError("give --lambda or --strings".into())),
                    };
                    (sierpinski_coloring(&family)?, &s.out)
                }
                ColoringKind::Forest(f) => (forest_partition_coloring(f.n)?, &f.out),
                ColoringKind::Blowup(b) => {
                    let base = read_input(&b.base, &mut inputs, parse_coloring)?;
                    (blowup_coloring(&base, &b.blocks, b.inner)?, &b.out)
                }
                ColoringKind::Random(r) => (random_coloring(r.n, r.colors, seed)?, &r.out),
            };
            coloring_report(&c, out.out.as_deref())?
        }
        Command::Cnf(a) => {
            let inst = emit_cnf(a.n, a.m, a.kappa, a.colors)?;
            let dimacs = inst.to_dimacs();
            let outcome = json!({
                "variables": inst.num_vars,
                "clauses": inst.clauses.len(),
                "forbidden_sha256": inst.forbidden_digest,
                "dimacs_sha256": kc_sha256(&dimacs),
            });
            Report::ok(emit(a.out.out.as_deref(), &dimacs)?, outcome)
        }
        Command::VerifyModel(a) => {
            let inst = read_input(&a.cnf, &mut inputs, CnfInstance::from_dimacs)?;
            let lits = read_input(&a.model, &mut inputs, parse_model)?;
            verify_model(&inst, &lits)?
        }
        Command::DeltaMine(a) => {
            let family = read_input(&a.family, &mut inputs, parse_pair_family)?;
            let found = mine_delta_system(&family, a.size)?;
            let text = match &found {
                None => "none\n".to_string(),
                Some(r) => format!("{}\n", serde_json::to_string_pretty(r)?),
            };
            Report::ok(text, json!({ "report": found }))
        }
        Command::Replay(_) => bail!("replay is not a recordable command"),
    };
    report.inputs = inputs;
    Ok(report)
}

fn kc_sha256(text: &str) -> String {
    use sha2::{Digest, Sha256};
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn coloring_report(c: &EdgeColoring, out: Option<&Path>) -> Result<Report> {
    let body = write_coloring(c);
    let outcome = json!({ "coloring": c, "sha256": kc_sha256(&body) });
    Ok(Report::ok(emit(out, &body)?, outcome))
}

fn verify_model(inst: &CnfInstance, lits: &[i32]) -> Result<Report> {
    let p = inst.params;
    let rejected = |text: String, outcome: Value| Report {
        text,
        outcome,
        status: Status::Rejected,
        inputs: BTreeMap::new(),
    };
    let assignment = assignment_from_literals(inst.num_vars, lits).map_err(|e| InputError(e.to_string()))?;
    if let Some(i) = inst.first_violated(&assignment) {
        return Ok(rejected(
            format!("rejected: clause {} falsified\n", i + 1),
            json!({ "valid": false, "falsified_clause": i + 1 }),
        ));
    }
    let coloring = decode_model(inst, &assignment)?;
    let witness = if p.m <= p.n {
        arrow_check(&coloring, p.kappa, p.m, ArrowMode::Exact)?
    } else {
        None
    };
    if let Some(w) = witness {
        return Ok(rejected(
            format!(
                "rejected: model satisfies the CNF but color {} on {} is {}-connected\n",
                w.color,
                join(&w.vertices),
                p.kappa
            ),
            json!({ "valid": false, "witness": w }),
        ));
    }
    Ok(Report::ok(
        format!(
            "verified: model satisfies all {} clauses and the decoded coloring of K_{} has no monochromatic {}-connected {}-set\n",
            inst.clauses.len(),
            p.n,
            p.kappa,
            p.m
        ),
        json!({ "valid": true, "coloring": coloring }),
    ))
}

/// Re-executes stored manifests and compares their outcome digests.
pub fn replay(store: &Store, line: Option<usize>) -> Result<Status> {
    let manifests = store.load()?;
    if manifests.is_empty() {
        return Err(InputError("the result store is empty".into()).into());
    }
    let selected: Vec<(usize, _)> = match line {
        Some(l) if l == 0 || l > manifests.len() => {
            return Err(InputError(format!("no manifest at line {l} ({} stored)", manifests.len())).into())
        }
        Some(l) => vec![(l, &manifests[l - 1])],
        None => manifests.iter().enumerate().map(|(i, m)| (i + 1, m)).collect(),
    };
    let mut status = Status::Ok;
    for (l, m) in selected {
        let cli = Cli::try_parse_from(std::iter::once("kcr".to_string()).chain(m.args.iter().cloned()))
            .with_context(|| format!("manifest {l}: stored arguments no longer parse"))?;
        let changed: Vec<&String> = m
            .inputs
            .iter()
            .filter(|(path, digest)| file_digest(Path::new(path)).ok().as_ref() != Some(*digest))
            .map(|(path, _)| path)
            .collect();
        let verdict = if !changed.is_empty() {
            format!(
                "input changed: {}",
                changed.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
            )
        } else {
            let report = execute(&cli.command, m.seed)?;
            if outcome_digest(&report.outcome) == m.digest {
                "ok".to_string()
            } else {
                "MISMATCH".to_string()
            }
        };
        if verdict != "ok" {
            status = Status::Rejected;
        }
        println!("{l} {} {} {verdict}", m.command, &m.digest[..12]);
    }
    Ok(status)
}
