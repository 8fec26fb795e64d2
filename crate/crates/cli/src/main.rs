//! `maxsub` — enumerate all maximal induced subgraphs of a graph that
//! satisfy a chosen property.

mod commands;
mod format;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "maxsub",
    version,
    about = "Enumerate all maximal induced subgraphs satisfying a graph property"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the maximal satisfying subgraphs of a graph, one per line.
    Enumerate(EnumerateArgs),
    /// Test one vertex set for satisfaction and maximality.
    Check(CheckArgs),
    /// Run a benchmark family and print a timing table.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// Pick by property class: `hered` for hereditary, `vcs` otherwise.
    Auto,
    /// Candidate-pool engine (hereditary properties).
    Hered,
    /// Two-stack engine (connected-/rooted-hereditary properties).
    Vcs,
    /// Vertex-ordered engine for trees/DAGs; needs --vertex.
    Ordered,
    /// Streaming engine for any class; solutions print as found.
    Incremental,
    /// Brute-force reference enumerator (small graphs only).
    Oracle,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Graph file path.
    #[arg(long)]
    graph: String,
    /// Property name: `clique`, `independent-set`, `bipartite`,
    /// `connected-bipartite`, `star`, or `rooted-clique`.
    #[arg(long)]
    property: String,
    #[arg(long, value_enum, default_value_t = Engine::Auto)]
    engine: Engine,
    /// Restrict to solutions containing this vertex (engines vcs,
    /// ordered, oracle).
    #[arg(long)]
    vertex: Option<usize>,
    /// Stop after this many solutions.
    #[arg(long)]
    limit: Option<u64>,
    /// Print a stats block to stderr.
    #[arg(long)]
    stats: bool,
    /// One JSON array per line instead of space-separated ids.
    #[arg(long)]
    json: bool,
    /// Sort the whole output, so any two engines diff equal.
    #[arg(long)]
    canonical: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    property: String,
    /// Vertex set to test, comma-separated ids (e.g. `0,2,5`).
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchFamily {
    /// Hub-and-pairs graphs: 2^n + 1 maximal bipartite subgraphs.
    G2,
    /// Disjoint triangles: 3^k maximal independent sets.
    Triangles,
    /// Seeded random digraphs.
    Random,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    family: BenchFamily,
    /// Property to enumerate; defaults per family (g2: bipartite,
    /// triangles/random: independent-set).
    #[arg(long)]
    property: Option<String>,
    /// Smallest family parameter (g2: n, triangles: k).
    #[arg(long, default_value_t = 1)]
    min: usize,
    /// Largest family parameter (defaults: g2 6, triangles 5).
    #[arg(long)]
    max: Option<usize>,
    /// Vertex count for the random family.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Number of random instances.
    #[arg(long, default_value_t = 5)]
    count: usize,
    /// RNG seed for the random family.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Edge density for the random family.
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, value_enum, default_value_t = Engine::Incremental)]
    engine: Engine,
}

/// Errors mapped onto the process exit codes: 1 usage/configuration,
/// 2 graph parse, 3 internal.
#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] format::ParseError),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Enumerate(args) => commands::enumerate(args),
        Command::Check(args) => commands::check(args),
        Command::Bench(args) => commands::bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
