//! Command-line front end for `pdneg-core`.
//!
//! Reads distributions from a file or stdin, applies negators and analysis
//! checks, and writes JSON or CSV to stdout. Exit codes: 0 success, 1 a check
//! failed (the report is still written), 2 usage/parse/validation errors,
//! 3 a descriptor could not be applied.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use pdneg_core::analysis::{DEFAULT_GRID_SIZE, IDENTITY_TOLERANCE};
use pdneg_core::negators::parse;

mod commands;
pub mod input;
pub mod output;

pub use input::{InputDocument, InputError};
pub use output::{Emitter, Format};

#[derive(Debug, Parser)]
#[command(name = "pdneg", version, about = "Negations of probability distributions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Round numbers to six decimals and indent JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Tolerance for check comparisons.
    #[arg(long, default_value_t = IDENTITY_TOLERANCE, global = true)]
    pub tol: f64,
    /// Read distributions from this file instead of stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Negate every input distribution.
    Negate {
        /// Negator descriptor, e.g. `yager` or `linear:alpha=0.5`.
        negator: String,
    },
    /// Run the diagnostic checks for a descriptor at length `n`.
    Check {
        negator: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
        grid: usize,
        /// Random distributions for the negation-axiom sweep.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Apply a negator repeatedly and trace the iterates.
    Iterate {
        negator: String,
        #[arg(long)]
        steps: usize,
    },
    /// Apply the linear negators for alpha on a uniform grid over [0, 1].
    SweepAlpha {
        /// Required length of every input distribution.
        #[arg(long)]
        n: Option<usize>,
        /// Number of alpha values (at least 2).
        #[arg(long, default_value_t = 11)]
        alphas: usize,
    },
    /// Quadratic entropy of every input distribution.
    Entropy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    ChecksFailed,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::ChecksFailed => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{label}: {source}")]
    Validation {
        label: String,
        source: pdneg_core::Error,
    },
    #[error("descriptor: {0}")]
    Descriptor(pdneg_core::Error),
    #[error("{0}")]
    Argument(String),
    #[error("{context}: {source}")]
    Apply {
        context: String,
        source: pdneg_core::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Apply { .. } => 3,
            _ => 2,
        }
    }
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<InputDocument, CliError> {
    let text = match path {
        Some(path) => fs::read_to_string(path)?,
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            text
        }
    };
    Ok(InputDocument::parse(&text)?)
}

pub fn run(cli: &Cli, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<Outcome, CliError> {
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(CliError::Argument(format!("--tol must be a finite non-negative number, got {}", cli.tol)));
    }
    let em = Emitter {
        format: cli.format,
        pretty: cli.pretty,
    };
    let descriptor = |s: &str| parse(s).map_err(CliError::Descriptor);
    let input = |stdin: &mut dyn Read| read_input(cli.input.as_ref(), stdin);
    match &cli.command {
        Command::Negate { negator } => {
            let expr = descriptor(negator)?;
            commands::negate(&expr, &input(stdin)?, &em, stdout)
        }
        Command::Check {
            negator,
            n,
            grid,
            samples,
        } => {
            let expr = descriptor(negator)?;
            let opts = commands::CheckOptions {
                n: *n,
                grid_size: *grid,
                tolerance: cli.tol,
                seed: cli.seed,
                samples: *samples,
            };
            commands::check(&expr, &opts, &em, stdout)
        }
        Command::Iterate { negator, steps } => {
            let expr = descriptor(negator)?;
            commands::iterate(&expr, *steps, &input(stdin)?, &em, stdout)
        }
        Command::SweepAlpha { n, alphas } => commands::sweep_alpha(*n, *alphas, &input(stdin)?, &em, stdout),
        Command::Entropy => commands::entropy_cmd(&input(stdin)?, &em, stdout),
    }
}
