//! `pursuit`: generate graphs, solve games, simulate and verify strategies,
//! check inequalities and reproduce the acceptance claims.
//!
//! Exit codes: 0 success / property holds, 1 property violated or refuted,
//! 2 usage or input error, 3 resource limit hit.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "pursuit", version, about = "Cops and robbers workbench")]
pub struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Budget file with `key = value` lines (max_states, max_product_states, time_limit_secs).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Worker threads for solver sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Run single-threaded regardless of --threads.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[arg(long, global = true, value_name = "N")]
    pub max_states: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    pub max_product_states: Option<u64>,
    #[arg(long, global = true, value_name = "SECS")]
    pub time_limit: Option<u64>,
    /// More log output on stderr (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a graph from a named family.
    Generate(GenerateArgs),
    /// Solve the k-cop game and print its summary.
    Solve(SolveArgs),
    /// Least number of cops that wins, up to --max-k.
    Copnumber(CopnumberArgs),
    /// Play one game between two policies.
    Simulate(SimulateArgs),
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Check(CheckCommand),
    /// Interval filament representations.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Run a named claim recipe (or `all`).
    Reproduce(ReproduceArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Grid,
    ToroidalGrid,
    Petersen,
    ProjectiveIncidence,
    Random,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// Prime order of the projective plane.
    #[arg(long)]
    pub q: Option<usize>,
    /// Edge probability for `random`.
    #[arg(long, default_value_t = 0.4)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Replace every edge by a path of this length.
    #[arg(long, value_name = "D")]
    pub subdivide: Option<usize>,
    /// Emit the line graph instead.
    #[arg(long)]
    pub line_graph: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Speeds {
    #[arg(long, default_value_t = 1)]
    pub cop_speed: usize,
    #[arg(long, default_value_t = 1)]
    pub robber_speed: usize,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    pub graph: PathBuf,
    #[arg(short, long)]
    pub k: usize,
    #[command(flatten)]
    pub speeds: Speeds,
}

#[derive(Args, Debug)]
pub struct CopnumberArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub max_k: usize,
    #[command(flatten)]
    pub speeds: Speeds,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CopsKind {
    /// Solver-optimal cops.
    Optimal,
    /// One cop following a dismantling order.
    Copwin,
    /// Two cops on the intersection graph of a filament representation (`--rep`).
    Filament,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RobberKind {
    Optimal,
    Greedy,
    Stationary,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    /// Graph file; omit with `--cops filament`.
    pub graph: Option<PathBuf>,
    #[arg(long, default_value = "optimal")]
    pub cops: CopsKind,
    #[arg(long, default_value = "optimal")]
    pub robber: RobberKind,
    /// Number of cops for optimal play (default: the cop number).
    #[arg(short, long)]
    pub k: Option<usize>,
    /// Start vertex for the stationary robber.
    #[arg(long)]
    pub start: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    pub turns: usize,
    #[arg(long)]
    pub rep: Option<PathBuf>,
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Exhaustively check the cop squad guarding N[P] for a geodesic P.
    GuardNpath(GuardArgs),
    /// Exhaustively check that a cop policy captures every robber.
    Capture(CaptureArgs),
    /// Re-check a recorded trace move by move.
    Trace { trace: PathBuf },
}

#[derive(Args, Debug)]
pub struct GuardArgs {
    pub graph: PathBuf,
    /// Comma-separated path vertices.
    #[arg(long, value_delimiter = ',', required = true)]
    pub path: Vec<usize>,
    /// Robber region (default: every vertex off the path).
    #[arg(long, value_delimiter = ',')]
    pub region: Option<Vec<usize>>,
    /// Use the four-cop formation (insufficient in general).
    #[arg(long)]
    pub four: bool,
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CaptureArgs {
    /// Graph file; omit with `--cops filament`.
    pub graph: Option<PathBuf>,
    #[arg(long, default_value = "copwin")]
    pub cops: CopsKind,
    #[arg(short, long)]
    pub k: Option<usize>,
    /// Turn bound (default: 10n + 10 for filament cops, else 4n^2).
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long)]
    pub rep: Option<PathBuf>,
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// cn(G) <= cn(G^(d)) <= cn(G) + 1.
    Subdivision {
        graph: PathBuf,
        #[arg(short, default_value_t = 2)]
        d: usize,
    },
    /// ceil(cn(G)/2) <= cn(L(G)) <= cn(G) + 1.
    Linegraph { graph: PathBuf },
    /// cn of the (d,d)-game is at most cn.
    Speed {
        graph: PathBuf,
        #[arg(short, default_value_t = 2)]
        d: usize,
    },
    /// Try to show cn > 15 (so the graph is not a string graph).
    RefuteString {
        graph: PathBuf,
        /// Largest k for the exact search.
        #[arg(long, default_value_t = 4)]
        k_budget: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum RepCommand {
    /// Validate a representation (exit 1 on violations).
    Check { rep: PathBuf },
    /// Write the intersection graph.
    Graph {
        rep: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Top filament sequence of a vertex set (default: all).
    Envelope {
        rep: PathBuf,
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Sample a random valid representation.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        bends: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// Claim id, or `all`; `--list` shows the ids.
    #[arg(required_unless_present = "list")]
    pub claim: Option<String>,
    #[arg(long)]
    pub list: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_code_for(&e))
        }
    }
}
