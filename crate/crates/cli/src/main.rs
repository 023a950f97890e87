//! `pentagon`: verify, construct, enumerate and classify solutions of the
//! pentagon equation from the command line.
//!
//! Exit status is 0 for success and true verdicts, 1 for false verdicts and
//! method disagreements, 2 for input errors.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "pentagon",
    version,
    about = "Set-theoretical solutions of the pentagon equation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    /// JSON.
    Structured,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Raw,
    Theta,
    Theorem,
    /// Theta scan and coset enumeration, compared.
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionName {
    KtS,
    KtT,
    Endo,
    Constant,
    Militaru,
    Zakrzewski,
    BaajSkandalis,
    Coset,
    Sign,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the pentagon identity for a pair-map file.
    Verify {
        map: PathBuf,
        /// Group file; on success the kernel and representatives are reported.
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Build a named solution and print it as a pair-map document.
    Construct(ConstructArgs),
    /// List all solutions on a set or group.
    Enumerate(EnumerateArgs),
    /// Enumerate and partition the solutions into equivalence classes.
    Classify(EnumerateArgs),
    /// Recover the normal subgroup and representatives of a group solution.
    Decompose {
        map: PathBuf,
        #[arg(long)]
        group: PathBuf,
    },
    /// List the exact factorizations of a group.
    Factorize {
        #[arg(long)]
        group: PathBuf,
    },
    /// Report every property of a pair map, with witnesses.
    Props { map: PathBuf },
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub name: ConstructionName,
    /// Group (or, for endo and constant, semigroup table) file.
    #[arg(long)]
    pub group: Option<PathBuf>,
    /// Carrier size for militaru.
    #[arg(long)]
    pub size: Option<usize>,
    /// Idempotent endomorphism images, e.g. "0 3 0 3 0 3".
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    /// Idempotent element for constant.
    #[arg(long)]
    pub element: Option<usize>,
    /// Normal subgroup for coset.
    #[arg(long)]
    pub kernel: Option<String>,
    /// Representatives for coset.
    #[arg(long)]
    pub reps: Option<String>,
    #[arg(long = "factor-a")]
    pub factor_a: Option<String>,
    #[arg(long = "factor-b")]
    pub factor_b: Option<String>,
    /// Degree of the symmetric group for sign.
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, conflicts_with = "size")]
    pub group: Option<PathBuf>,
    /// Carrier size for an unconstrained raw scan.
    #[arg(long)]
    pub size: Option<usize>,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long)]
    pub classify: bool,
    /// Maximum number of candidates a scan may visit.
    #[arg(long)]
    pub budget: Option<u128>,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let format = cli.output.format;
    match cli.command {
        Command::Verify { map, group } => commands::verify(&map, group.as_deref(), format),
        Command::Construct(args) => commands::construct(&args, format),
        Command::Enumerate(args) => commands::enumerate(&args, args.classify, format),
        Command::Classify(args) => commands::enumerate(&args, true, format),
        Command::Decompose { map, group } => commands::decompose(&map, &group, format),
        Command::Factorize { group } => commands::factorize(&group, format),
        Command::Props { map } => commands::props(&map, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let outcome = match run(cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error[{}]: {}", e.code(), e);
            return ExitCode::from(2);
        }
    };
    match &output.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.report) {
                eprintln!("error[io]: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", outcome.report),
    }
    if outcome.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
