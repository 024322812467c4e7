mod commands;
mod input;

use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Exact copositivity, zero structure and cp-rank bounds.
#[derive(Debug, Parser)]
#[command(name = "cprank", version)]
pub struct Cli {
    /// Output format; `dot` is available for graph-valued commands.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for parallel steps (default: all cores).
    #[arg(long, env = "CPRANK_THREADS", global = true)]
    pub threads: Option<usize>,
    /// Required minimum entry of `YQᵀ` in `nearly-positive`.
    #[arg(long, default_value_t = 1e-6, global = true)]
    pub epsilon: f64,
    /// Seed for the randomized restarts of `nearly-positive`.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Copositivity of a symmetric matrix.
    Copositive {
        #[command(subcommand)]
        action: CopositiveAction,
    },
    /// Zero supports, minimal zeros and the matrix W of a copositive matrix.
    Zeros { matrix: PathBuf },
    /// Irreducibility with respect to the diagonal and off-diagonal unit matrices.
    Irreducible { matrix: PathBuf },
    /// Maximum triangle-free subgraph of a graph (JSON or DOT).
    Tf { graph: PathBuf },
    /// cp-rank bounds.
    Cp {
        #[command(subcommand)]
        action: CpAction,
    },
    /// Rewrites of weighted cp-decompositions.
    Decomp {
        #[command(subcommand)]
        action: DecompAction,
    },
    /// The 44 potential minimal-support families.
    Table1 {
        #[command(subcommand)]
        action: Table1Action,
    },
    /// The Horn matrix.
    Horn,
    /// Orthogonal Q with YQᵀ entrywise at least epsilon, for a 3×3 Y.
    NearlyPositive { matrix: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CopositiveAction {
    Check { matrix: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CpAction {
    /// Rule-based bound from the graph of a nonnegative matrix, with its derivation.
    Bound { matrix: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum DecompAction {
    /// Rotate the two terms of a decomposition (support of the first inside the second).
    Pairmove { decomposition: PathBuf },
    /// Rewrite until all supports are distinct.
    Distinct { decomposition: PathBuf },
    /// Decomposition with supports of size ≤ 2 for a matrix in the orbit of a DD matrix.
    Dd { matrix: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum Table1Action {
    /// Certify every case, or a single one.
    Verify {
        #[arg(long)]
        case: Option<u32>,
        /// Write the eleven figure graphs as DOT files here.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
}

/// A failed run: exit code 1 for negative analysis results, 2 for bad input.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn negative(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<cprank_core::Error> for Failure {
    fn from(e: cprank_core::Error) -> Self {
        use cprank_core::Error as E;
        match e {
            E::NotCopositive | E::WitnessNotFound(_) | E::CaseFailed { .. } | E::StrategyInapplicable { .. } => {
                Failure::negative(e.to_string())
            }
            _ => Failure::input(e.to_string()),
        }
    }
}

/// What a command produced: text for standard output and an exit code.
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !(cli.epsilon > 0.0) {
        eprintln!("error: --epsilon must be positive");
        return ExitCode::from(2);
    }
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.output.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
