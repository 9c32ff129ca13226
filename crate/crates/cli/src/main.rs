mod algebra;
mod groups;
mod render;
mod reproduce;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "twistprod", version, about = "Twisted products of groups and Lie algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Numerical tolerance for every check.
    #[arg(long, global = true, env = "TWISTPROD_TOL", default_value_t = twistprod::DEFAULT_TOL)]
    pub tol: f64,
    /// Seed for sampled and randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structure constants of a twisted Lie algebra from a twist spec.
    TwistLie { spec: PathBuf },
    /// Inner twist of an algebra with itself.
    InnerTwist { algebra: PathBuf },
    /// Sectional and scalar curvature of the orthonormal basis metric.
    Curvature {
        algebra: PathBuf,
        /// Use the 2-step nilpotent shortcut for the scalar curvature.
        #[arg(long)]
        shortcut: bool,
    },
    /// Jacobi identity on all basis triples.
    CheckJacobi { algebra: PathBuf },
    /// Whether every bracket of brackets vanishes.
    CheckNilpotent { algebra: PathBuf },
    /// Twisted product of two finite groups, with the brute-force axiom check.
    FgTwist(groups::FgArgs),
    /// The group condition for two finite group actions.
    FgCondition(groups::FgArgs),
    /// Finite-difference operators of a built-in smooth action.
    DeriveAction(reproduce::DeriveArgs),
    /// Recompute a worked example and compare with the embedded values.
    Reproduce {
        /// example1..example5, a builtin name, or `all`.
        target: String,
    },
    /// Check rho' = 6 rho for the inner twist of 2-step nilpotent algebras.
    #[command(name = "verify-6rho")]
    Verify6Rho(reproduce::SixRhoArgs),
}

/// Result of a successful run: the report and whether its checks passed.
pub struct Outcome {
    pub pass: bool,
    pub text: String,
    pub json: Value,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] twistprod::Error),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: twistprod::Error,
    },
}

pub type CliResult<T> = Result<T, CliError>;

/// Attaches the offending path to a loading error.
pub fn load<T>(path: &std::path::Path, f: impl FnOnce(&std::path::Path) -> twistprod::Result<T>) -> CliResult<T> {
    f(path).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::TwistLie { spec } => algebra::twist_lie(g, spec),
        Command::InnerTwist { algebra } => algebra::inner_twist(g, algebra),
        Command::Curvature { algebra, shortcut } => algebra::curvature(g, algebra, *shortcut),
        Command::CheckJacobi { algebra } => algebra::check_jacobi(g, algebra),
        Command::CheckNilpotent { algebra } => algebra::check_nilpotent(g, algebra),
        Command::FgTwist(args) => groups::fg_twist(g, args),
        Command::FgCondition(args) => groups::fg_condition(g, args),
        Command::DeriveAction(args) => reproduce::derive_action(g, args),
        Command::Reproduce { target } => reproduce::reproduce(g, target),
        Command::Verify6Rho(args) => reproduce::verify_six_rho(g, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let body = match cli.global.format {
        Format::Text => outcome.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("reports serialize");
            s.push('\n');
            s
        }
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if outcome.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
