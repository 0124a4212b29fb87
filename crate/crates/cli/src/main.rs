//! `parcoal`: check, globalize, dualize and generate structure bundles.
//!
//! Exit codes: 0 all checks pass, 1 an axiom fails, 2 bad input,
//! 3 an internal invariant is violated.

mod commands;
mod error;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "parcoal", version, about = "Exact checks and globalizations for partial (co)actions on coalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Coalgebra,
    Hopf,
    Mc,
    Pmc,
    Pma,
    Cc,
    Pcc,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Pmc,
    Pcc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DualTarget {
    Action,
    Coaction,
    Hopf,
    Globalization,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    GroupAlgebra,
    SubgroupAction,
    SubgroupCoaction,
    RegularAction,
    TrivialCoaction,
    AdjointCoaction,
    DualBasisCoaction,
}

#[derive(Subcommand)]
enum Command {
    /// Run axiom checkers on every matching object in a bundle.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Print reports as JSON.
        #[arg(long)]
        json: bool,
        /// Also check the mirrored axioms (PMC-4, PMA-4, PCC-4).
        #[arg(long)]
        symmetric: bool,
    },
    /// Build and verify the standard globalization of a partial (co)action.
    Globalize {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Name of the action or coaction to globalize when the bundle has several.
        #[arg(long)]
        object: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute dual structures and their cross-check reports.
    Dualize {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: DualTarget,
        #[arg(long)]
        object: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a catalog instance as a bundle.
    Generate {
        #[arg(value_enum)]
        name: Generator,
        /// `Z<n>` (n ≤ 12), `S3` or `Klein`.
        #[arg(long, default_value = "Z2")]
        group: String,
        /// JSON Cayley table `{"order", "table", "labels"}`; overrides `--group`.
        #[arg(long)]
        group_file: Option<PathBuf>,
        /// `trivial`, `all`, `A3`, or comma-separated element labels.
        #[arg(long, default_value = "all")]
        subgroup: String,
        /// `Q` or `F<p>`.
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-serialize a bundle canonically and confirm it parses back identically.
    Roundtrip {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Check { file, suite, json, symmetric } => commands::check(&file, suite, json, symmetric),
        Command::Globalize { file, mode, object, out } => commands::globalize(&file, mode, object.as_deref(), out.as_deref()),
        Command::Dualize { file, what, object, out } => commands::dualize(&file, what, object.as_deref(), out.as_deref()),
        Command::Generate { name, group, group_file, subgroup, field, out } => {
            commands::generate(name, &group, group_file.as_deref(), &subgroup, &field, out.as_deref())
        }
        Command::Roundtrip { file, out } => commands::roundtrip(&file, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
