//! `weylchar` — exact characters and weight multiplicities for the
//! A-series Lie algebras, from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 internal inconsistency (including
//! a failed verification sweep).

mod cache;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use weylchar::document::OutputDocument;
use weylchar::multiplicity::solve_multiplicities;
use weylchar::orbits::weyl_orbit;
use weylchar::symfunc::{degenerated_schur, generic_schur};
use weylchar::weights::{DominantWeight, Partition};
use weylchar::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "weylchar",
    about = "Exact characters and weight multiplicities for A-series Lie algebras",
    long_about = "Computes orbit multiplicity tables of irreducible sl(N) representations \
                  with exact rational arithmetic, plus the Schur functions and Weyl orbits \
                  behind them.  The rank flag is always --n = N, the number of permutation \
                  coordinates, so the algebra A_4 = sl(5) is --n 5."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity table and dimension of an irreducible representation
    Character(CharacterArgs),
    /// Print a Schur function (generic or constraint-reduced)
    Schur(SchurArgs),
    /// List a Weyl orbit
    Orbit(OrbitArgs),
    /// Cross-check the solver against the independent oracles
    Verify(verify::VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CharacterArgs {
    /// Number of permutation coordinates N (the algebra is A_{N-1})
    #[arg(long)]
    n: usize,
    /// Dynkin labels a1,...,a_{N-1} (comma separated)
    #[arg(long, value_delimiter = ',')]
    dynkin: Option<Vec<u32>>,
    /// Partition coordinates q1,...,qN (comma separated, non-increasing)
    #[arg(long, value_delimiter = ',')]
    partition: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cache directory for solved tables (or WEYLCHAR_CACHE_DIR)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct SchurArgs {
    /// Degree M of the Schur function
    #[arg(long)]
    degree: usize,
    /// Print the unconstrained function of degree M in x1..xM
    #[arg(long)]
    generic: bool,
    /// Rank parameter N: apply the determinant-one constraint of A_{N-1}
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct OrbitArgs {
    /// Number of permutation coordinates N
    #[arg(long)]
    n: usize,
    /// Partition coordinates q1,...,qN (comma separated, non-increasing)
    #[arg(long, value_delimiter = ',')]
    partition: Vec<u32>,
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidArgument(msg) => CliError::Usage(msg),
            CoreError::Inconsistency(msg) => CliError::Internal(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            _ => {
                eprint!("{e}");
                return ExitCode::from(1);
            }
        },
    };
    let outcome = std::panic::catch_unwind(|| run(cli));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Ok(Err(CliError::Internal(msg))) => {
            eprintln!("internal inconsistency: {msg}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("internal inconsistency: unexpected panic");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Character(args) => cmd_character(args),
        Command::Schur(args) => cmd_schur(args),
        Command::Orbit(args) => cmd_orbit(args),
        Command::Verify(args) => verify::cmd_verify(args),
    }
}

fn cmd_character(args: CharacterArgs) -> Result<(), CliError> {
    if args.n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let dominant = match (&args.dynkin, &args.partition) {
        (Some(labels), None) => DominantWeight::from_dynkin(args.n, labels)?,
        (None, Some(parts)) => {
            if parts.len() != args.n {
                return Err(CliError::Usage(format!(
                    "--partition needs exactly {} entries",
                    args.n
                )));
            }
            let p = Partition::new(parts.clone())?;
            DominantWeight::from_partition(args.n, &p)?
        }
        _ => {
            return Err(CliError::Usage(
                "provide exactly one of --dynkin or --partition".into(),
            ))
        }
    };

    let doc = match cache::resolve_dir(args.cache_dir.as_deref()) {
        Some(dir) => cache::load_or_compute(&dir, args.n, &dominant)?,
        None => {
            let table = solve_multiplicities(args.n, &dominant)?;
            OutputDocument::from_table(&table)?
        }
    };

    match args.format {
        Format::Text => print!("{}", output::format_text(&doc)),
        Format::Json => {
            let json = serde_json::to_string_pretty(&doc)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            println!("{json}");
        }
    }
    Ok(())
}

fn cmd_schur(args: SchurArgs) -> Result<(), CliError> {
    let poly = match (args.generic, args.n) {
        (true, None) => generic_schur(args.degree),
        (false, Some(n)) => {
            if n < 2 {
                return Err(CliError::Usage("--n must be at least 2".into()));
            }
            degenerated_schur(n, args.degree)?
        }
        _ => {
            return Err(CliError::Usage(
                "provide exactly one of --generic or --n".into(),
            ))
        }
    };
    println!("{}", poly.to_text("x"));
    Ok(())
}

fn cmd_orbit(args: OrbitArgs) -> Result<(), CliError> {
    if args.n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    if args.partition.len() != args.n {
        return Err(CliError::Usage(format!(
            "--partition needs exactly {} entries",
            args.n
        )));
    }
    let p = Partition::new(args.partition.clone())?;
    let orbit = weyl_orbit(&p, args.n)?;
    for elem in &orbit {
        let line: Vec<String> = elem.iter().map(|v| v.to_string()).collect();
        println!("{}", line.join(","));
    }
    println!("size {}", orbit.len());
    Ok(())
}
