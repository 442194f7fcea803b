//! `wgg`: solve, generate, verify and benchmark weighted graph games.
//!
//! Exit codes: 0 success, 1 usage, 2 parse, 3 precondition, 4 internal.

mod bench;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "wgg", version, about = "Coalition structures for weighted graph games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and write a JSON report.
    Solve(SolveArgs),
    /// Generate an instance.
    Gen(GenArgs),
    /// Check a report against its instance.
    Verify {
        instance: PathBuf,
        report: PathBuf,
    },
    /// Run solvers over every graph file in a directory and write CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    alg: Alg,
    /// Slack of the bounded-degree palette, e.g. `0.5` or `1/3`.
    #[arg(long, default_value = "1/2")]
    epsilon: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    /// Edge probability for `gnp`.
    #[arg(long)]
    p: Option<f64>,
    /// Source graph for the reductions (weights ignored).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
    wmin: i64,
    #[arg(long, default_value_t = 5)]
    wmax: i64,
    /// Draw magnitudes in [1, wmax] and make each weight negative with this probability.
    #[arg(long)]
    neg_prob: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    corpus: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "cover")]
    algs: Vec<Alg>,
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    #[arg(long, default_value = "1/2")]
    epsilon: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Brute,
    Forest,
    Treewidth,
    Cover,
    BoundedDegree,
}

impl From<Alg> for wgg_core::Algorithm {
    fn from(a: Alg) -> Self {
        use wgg_core::Algorithm as A;
        match a {
            Alg::Brute => A::Brute,
            Alg::Forest => A::Forest,
            Alg::Treewidth => A::Treewidth,
            Alg::Cover => A::Cover,
            Alg::BoundedDegree => A::BoundedDegree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tree,
    Grid,
    Regular,
    Gnp,
    ReduceIs,
    ReduceIsPm1,
}

/// A failure with its exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Precondition(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Precondition(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<wgg_core::Error> for Failure {
    fn from(e: wgg_core::Error) -> Self {
        if e.is_parse() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Precondition(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Gen(a) => commands::generate(a),
        Command::Verify { instance, report } => commands::verify(&instance, &report),
        Command::Bench(a) => bench::run(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
