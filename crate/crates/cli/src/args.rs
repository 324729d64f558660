use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand, ValueEnum};
use grundy_core::{Direction, GraphFamily};

const FAMILY_HELP: &str = "\
Generator specs use `name:key=val,...`:
  path:n=N  cycle:n=N  complete:n=N  star:n=N
  ktree:n=N,k=K          (n > k >= 1)
  pktree:n=N,k=K,p=P     (k-tree, each edge kept with probability P)
  split:s=S,c=C,p=P      (independent set S, clique C, cross edges with prob. P)
  gnp:n=N,p=P";

/// Chordal recognition and Grundy coloring on DIMACS graphs.
///
/// Exit codes: 0 success, 1 domain failure (not chordal, failed check,
/// oracle cap), 2 usage or parse error.
#[derive(Debug, Parser)]
#[command(name = "grundy", version, after_help = FAMILY_HELP)]
pub struct Args {
    /// Machine output as a JSON report, or human-readable text.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph and write it as DIMACS.
    Gen(GenArgs),
    /// Chordality, split recognition and elimination waves.
    Recognize(InputArgs),
    /// Color along a perfect elimination ordering (or a given order).
    Color(ColorArgs),
    /// Exact Γ, χ and α by exhaustive search.
    Exact(ExactArgs),
    /// Evaluate the Grundy bound battery on one graph or a sweep.
    CheckBounds(CheckBoundsArgs),
    /// Apply a change script, repairing the coloring after each step.
    Mutate(MutateArgs),
}

#[derive(Debug, ClapArgs)]
pub struct GenArgs {
    /// Generator string, e.g. `ktree:n=20,k=2`.
    pub family: GraphFamily,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; DIMACS goes to stdout when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, ClapArgs)]
pub struct InputArgs {
    /// DIMACS .col file.
    pub input: PathBuf,
}

#[derive(Debug, ClapArgs)]
pub struct ColorArgs {
    pub input: PathBuf,
    #[arg(long, default_value = "peo", value_parser = parse_direction)]
    pub direction: Direction,
    /// Color first-fit along this order instead (1-based ids, comma or
    /// space separated). Works on any graph.
    #[arg(long)]
    pub order: Option<String>,
    /// Also write `v <vertex> <color>` lines to this file.
    #[arg(long)]
    pub solution: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Gamma,
    Chi,
    Alpha,
    All,
}

#[derive(Debug, ClapArgs)]
pub struct ExactArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Which::All)]
    pub which: Which,
    /// Override every oracle size cap.
    #[arg(long)]
    pub cap_n: Option<usize>,
}

#[derive(Debug, ClapArgs)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "family", "exhaustive"])))]
pub struct CheckBoundsArgs {
    /// A single DIMACS file.
    pub input: Option<PathBuf>,
    /// Sweep over `count` graphs of this family, seeds `seed..seed+count`.
    #[arg(long)]
    pub family: Option<GraphFamily>,
    /// Sweep over every labeled graph on n vertices (`4` or `n=4`).
    #[arg(long, value_parser = parse_exhaustive)]
    pub exhaustive: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also check the partial k-tree bound with this k (implied by
    /// ktree/pktree families).
    #[arg(long)]
    pub ktree_width: Option<usize>,
    #[arg(long)]
    pub cap_n: Option<usize>,
    /// Include every per-instance report in the output.
    #[arg(long)]
    pub per_instance: bool,
}

#[derive(Debug, ClapArgs)]
pub struct MutateArgs {
    pub input: PathBuf,
    /// One change per line: `ae u v`, `re u v`, `av v: n1 n2 ...`, `rv v`.
    pub script: PathBuf,
    /// Direction for the initial coloring of a chordal input.
    #[arg(long, default_value = "peo", value_parser = parse_direction)]
    pub direction: Direction,
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse()
}

fn parse_exhaustive(s: &str) -> Result<usize, String> {
    let raw = s.strip_prefix("n=").unwrap_or(s);
    let n: usize = raw
        .parse()
        .map_err(|_| format!("expected n=<int>, got `{s}`"))?;
    if n > 7 {
        return Err(format!("exhaustive sweeps are limited to n <= 7, got {n}"));
    }
    Ok(n)
}
