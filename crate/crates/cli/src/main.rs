//! `kcr`: command-line workbench for connectivity-aware Ramsey experiments.
//!
//! Every command except `replay` appends a manifest to the result store.
//! Exit codes: 0 success, 1 failure (verification rejected, replay mismatch,
//! internal error), 2 input error, 3 unknown (budget exhausted).

mod commands;
mod store;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::commands::{InputError, Status};
use crate::store::{outcome_digest, RunManifest, Store};

pub const DEFAULT_SEED: u64 = 20_251_015;

#[derive(Debug, Parser)]
#[command(name = "kcr", version, about = "Workbench for the κ-connected Ramsey relation")]
pub struct Cli {
    /// JSON-lines result store; an index is kept next to it.
    #[arg(long, global = true, default_value = "kcr-results.jsonl")]
    pub store: PathBuf,
    /// Do not record this run.
    #[arg(long, global = true)]
    pub no_store: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Vertex connectivity of a graph, or a κ-connectivity verdict with certificate.
    Connectivity(ConnectivityArgs),
    /// Look for a monochromatic κ-connected m-set in a coloring.
    Arrow(ArrowArgs),
    /// Search for a coloring of K_n with no monochromatic κ-connected m-set.
    Search(SearchArgs),
    /// Least n at which every coloring has a monochromatic κ-connected m-set.
    Number(NumberArgs),
    /// Emit an explicit coloring file.
    Coloring(ColoringArgs),
    /// Emit the avoidance instance as DIMACS CNF.
    Cnf(CnfArgs),
    /// Check a SAT solver's model against a CNF produced by `cnf`.
    VerifyModel(VerifyModelArgs),
    /// Mine a Δ-system index set from a pair family.
    DeltaMine(DeltaMineArgs),
    /// Re-run stored manifests and compare outcome digests.
    Replay(ReplayArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Connectivity(_) => "connectivity",
            Command::Arrow(_) => "arrow",
            Command::Search(_) => "search",
            Command::Number(_) => "number",
            Command::Coloring(_) => "coloring",
            Command::Cnf(_) => "cnf",
            Command::VerifyModel(_) => "verify-model",
            Command::DeltaMine(_) => "delta-mine",
            Command::Replay(_) => "replay",
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ConnectivityArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub kappa: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ArrowArgs {
    pub coloring: PathBuf,
    #[arg(long)]
    pub kappa: usize,
    #[arg(long)]
    pub m: usize,
    /// Accept witness sets of any size from m to n.
    #[arg(long)]
    pub at_least: bool,
}

#[derive(Debug, Clone, Copy, Args, Serialize)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub kappa: usize,
    #[arg(long)]
    pub colors: usize,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Maximum number of color assignments.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Copy, Args, Serialize)]
pub struct NumberArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub kappa: usize,
    #[arg(long)]
    pub colors: usize,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Maximum number of color assignments per value of n.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ColoringArgs {
    #[command(subcommand)]
    pub kind: ColoringKind,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ColoringKind {
    /// First-difference coloring of a bitstring family.
    Sierpinski(SierpinskiArgs),
    /// Decomposition of K_n (n even) into n/2 Hamiltonian paths.
    Forest(ForestArgs),
    /// Replace each vertex of a base coloring by a block.
    Blowup(BlowupArgs),
    /// Uniform random colors drawn from the seed.
    Random(RandomArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct OutArg {
    /// Write the file here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SierpinskiArgs {
    /// Use all 2^λ strings of length λ.
    #[arg(long, conflicts_with = "strings", required_unless_present = "strings")]
    pub lambda: Option<usize>,
    /// Read the family from a bitstring file instead.
    #[arg(long)]
    pub strings: Option<PathBuf>,
    /// Order the full family by a seeded shuffle instead of binary order.
    #[arg(long, requires = "lambda")]
    pub shuffle: bool,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ForestArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BlowupArgs {
    #[arg(long)]
    pub base: PathBuf,
    /// Block sizes, comma separated, one per base vertex.
    #[arg(long, value_delimiter = ',', required = true)]
    pub blocks: Vec<usize>,
    /// Color of pairs inside a block.
    #[arg(long)]
    pub inner: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub colors: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CnfArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub kappa: usize,
    #[arg(long)]
    pub colors: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub out: OutArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyModelArgs {
    pub cnf: PathBuf,
    pub model: PathBuf,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DeltaMineArgs {
    pub family: PathBuf,
    #[arg(long)]
    pub size: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ReplayArgs {
    /// 1-based line of the manifest to replay; all manifests by default.
    #[arg(long)]
    pub line: Option<usize>,
}

fn run(cli: Cli, args: Vec<String>) -> anyhow::Result<Status> {
    if let Command::Replay(r) = &cli.command {
        return commands::replay(&Store::new(&cli.store), r.line);
    }
    let start = Instant::now();
    let report = commands::execute(&cli.command, cli.seed)?;
    let wall_time_ms = start.elapsed().as_millis() as u64;
    if !report.text.is_empty() {
        print!("{}", report.text);
    }
    if !cli.no_store {
        let manifest = RunManifest {
            command: cli.command.name().to_string(),
            args,
            params: serde_json::to_value(&cli.command)?,
            inputs: report.inputs,
            seed: cli.seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_ms,
            digest: outcome_digest(&report.outcome),
            outcome: report.outcome,
        };
        Store::new(&cli.store).append(&manifest)?;
    }
    Ok(report.status)
}

/// Input problems exit 2; anything the library flags as internal exits 1.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<InputError>() || cause.is::<std::io::Error>() {
            return 2;
        }
        if let Some(e) = cause.downcast_ref::<kc_ramsey::Error>() {
            return if matches!(e, kc_ramsey::Error::Internal(_)) {
                1
            } else {
                2
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(cli, args) {
        Ok(status) => ExitCode::from(status.code()),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
