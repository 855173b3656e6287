// SPDX-License-Identifier: MIT OR Apache-2.0

//! `fusedpath` command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input, 2 numerical or verification failure.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failure(String),
}

impl From<fusedpath::Error> for CliError {
    fn from(e: fusedpath::Error) -> Self {
        match e {
            fusedpath::Error::InvalidInstance(_) | fusedpath::Error::Parse(_) => CliError::Input(e.to_string()),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    F64,
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    WorstCase,
    Random,
    #[value(name = "1fl")]
    UnitWeights,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Path,
    Dp,
    Qp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Penalty level gamma to constraint level.
    ToConstrained,
    /// Constraint level to the smallest matching penalty level.
    ToPenalized,
}

#[derive(Debug, Parser)]
#[command(name = "fusedpath", version, about = "Exact solution paths for the weighted 1-D fused lasso")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print x*(gamma) as a JSON array.
    Solve {
        instance: PathBuf,
        #[arg(long)]
        gamma: String,
        #[arg(long, value_enum)]
        backend: Option<Backend>,
        #[arg(long, value_enum, default_value = "path")]
        method: Method,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Trace the full path and print its events (CSV) or events and segments (JSON).
    Path {
        instance: PathBuf,
        #[arg(long, value_enum)]
        backend: Option<Backend>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a generated instance as JSON.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        backend: Option<Backend>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Event counts over a family, sizes and seeds, as CSV.
    Events {
        #[arg(long, value_enum)]
        family: Family,
        /// Sizes: `a..b` (inclusive), `a..b:step` or a comma list.
        #[arg(long)]
        n: String,
        /// Number of seeds per size, starting at --seed.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum)]
        backend: Option<Backend>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a traced (or supplied) path against both fixed-gamma oracles.
    Verify {
        instance: PathBuf,
        /// Path file written by `path --format json`; traced afresh when absent.
        #[arg(long)]
        path: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, value_enum)]
        backend: Option<Backend>,
    },
    /// Convert between penalty and constraint levels.
    Convert {
        instance: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long)]
        value: String,
        #[arg(long, value_enum)]
        backend: Option<Backend>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { instance, gamma, backend, method, output } => {
            commands::solve(&instance, &gamma, backend, method, output.as_deref())
        }
        Command::Path { instance, backend, format, output } => {
            commands::path(&instance, backend, format, output.as_deref())
        }
        Command::Gen { family, n, seed, backend, output } => commands::gen(family, n, seed, backend, output.as_deref()),
        Command::Events { family, n, seeds, seed, backend, output } => {
            commands::events(family, &n, seed, seeds, backend, output.as_deref())
        }
        Command::Verify { instance, path, samples, backend } => {
            commands::verify(&instance, path.as_deref(), samples, backend)
        }
        Command::Convert { instance, direction, value, backend } => {
            commands::convert(&instance, direction, &value, backend)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Input(_) => 1,
                CliError::Failure(_) => 2,
            })
        }
    }
}
