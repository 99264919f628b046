//! `ste`: construct and verify signed regular graphs with two eigenvalues.
//!
//! Graphs go to stdout; the JSON run report goes to stderr for commands that
//! emit a graph and to stdout otherwise. Exit codes: 0 pass, 1 verification
//! failure, 2 usage or parse error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ste", version, about = "Signed regular graphs with exactly two eigenvalues")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format for emitted graphs.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    pub format: OutFormat,
    /// Clustering tolerance for floating-point eigenvalues.
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tolerance: f64,
    /// Write 1-indexed vertices in JSON and DOT output.
    #[arg(long, global = true)]
    pub one_indexed: bool,
    /// Custom seed graph for `construct chain --seed file`.
    #[arg(long, global = true)]
    pub seed_file: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Json,
    Matrix,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Admissible (t, λ1, λ2) triples for each valency.
    Params {
        #[arg(long = "k", required = true)]
        k: Vec<i64>,
        /// Also list feasible orders up to this bound.
        #[arg(long, default_value_t = 0)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build a graph from one of the families and verify it.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a property of a graph file.
    #[command(subcommand)]
    Verify(Verify),
    /// Search for weight-4 pairs of order 4.
    #[command(subcommand)]
    Search(Search),
    /// Re-emit a graph file in the chosen format.
    Export { graph: PathBuf },
    /// Emit a shipped example graph (figure1, figure2, figure3).
    Fixture { name: String },
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Λ(Kn⁺), or −Λ(Kn⁺) with --negate.
    LineComplete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        negate: bool,
    },
    /// The 3m-vertex 8-regular graph with spectrum [4^m, −2^2m].
    Block8 {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = XConv::Displayed)]
        x_convention: XConv,
    },
    /// Repeated Ac doubling from a seed up to valency k.
    Chain {
        /// k2, pentagon, or file:<path>.
        #[arg(long)]
        seed: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum XConv {
    Displayed,
    Stated,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Exact two-eigenvalue check.
    Ste { graph: PathBuf },
    /// Square {−1, 0, 1} matrix with WWᵗ = WᵗW = αI.
    Weighing {
        matrix: PathBuf,
        #[arg(long)]
        weight: Option<i64>,
    },
    /// λ_max ≤ 2√(k−1).
    Ramanujan { graph: PathBuf },
    /// Star-set identity for X and μ.
    Star {
        #[arg(long)]
        graph: PathBuf,
        /// Integer, or t,b for (t + √b)/2 (negative b selects the minus root).
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Comma-separated vertices.
        #[arg(long)]
        set: String,
    },
    /// Both partition identities with X paired to the larger eigenvalue.
    Partition {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Line-graph eigenvalues against those predicted from the graph.
    LineSpectrum { graph: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum Search {
    Block8M4 {
        /// Stop after this many candidate pairs.
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(commands::run(&cli))
}
