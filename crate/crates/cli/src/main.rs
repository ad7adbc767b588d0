mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Characters of Iwahori-Hecke algebras of types A, B, D and I2(m).
#[derive(Debug, Parser)]
#[command(name = "heckechar", version)]
pub struct Cli {
    /// Bounds config file (key = value lines).
    #[arg(long, global = true, env = "HECKECHAR_CONFIG")]
    config: Option<PathBuf>,
    /// Worker threads; overrides the config file and HECKECHAR_THREADS.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one character value.
    Char(CharArgs),
    /// Emit a full character table.
    Table(TableArgs),
    /// Run verification sweeps.
    Verify(VerifyArgs),
    /// Expand s_mu * pbar_r in the Schur basis.
    Expand(ExpandArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeTag {
    A,
    B,
    D,
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Closed formulas where they apply, the oracle elsewhere.
    Auto,
    /// Only closed formulas (sequences, dihedral sums, tableaux).
    Formula,
    /// The coset-sum induction oracle.
    Oracle,
}

/// Family and subgroup selection shared by `char` and `table`.
#[derive(Clone, Debug, Args)]
pub struct GroupArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    pub family: TypeTag,
    /// Rank parameter of types A, B and D (A uses n letters).
    #[arg(long)]
    pub n: Option<usize>,
    /// Dihedral parameter.
    #[arg(long)]
    pub m: Option<usize>,
    /// Signed composition giving the subgroup.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Generator set of the parabolic subgroup, e.g. t,s1,s2.
    #[arg(long = "J")]
    pub j: Option<String>,
    /// Dihedral subgroup index: 0 trivial, 1 for g1, 2 for g2.
    #[arg(long)]
    pub c: Option<u8>,
    /// Irreducible character of type A instead of an induced one.
    #[arg(long, conflicts_with_all = ["lambda", "j", "c", "base"])]
    pub irreducible: Option<String>,
    #[arg(long, default_value = "trivial")]
    pub base: String,
    #[arg(long, value_enum, default_value = "auto")]
    pub route: Route,
}

#[derive(Clone, Debug, Args)]
pub struct CharArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Type of the parabolic element, as a generator set.
    #[arg(long = "K", conflicts_with_all = ["w", "len"])]
    pub k: Option<String>,
    /// Group element: one-line notation, cycles, or a word like s1*s2.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "len")]
    pub w: Option<String>,
    /// Dihedral element length.
    #[arg(long, requires = "start")]
    pub len: Option<u32>,
    /// Dihedral element first generator (1 or 2).
    #[arg(long, requires = "len")]
    pub start: Option<u8>,
    /// Print the table of sequences and weights behind the value.
    #[arg(long)]
    pub sequences: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Clone, Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    /// A, B, D, I, omega, irreducible, extend, structural or all.
    #[arg(long)]
    pub suite: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Clone, Debug, Args)]
pub struct ExpandArgs {
    /// Partition mu; empty or "-" for the empty partition.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub mu: String,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

/// A failed run and its exit code.
#[derive(Debug)]
pub enum Failure {
    Lib(heckechar::Error),
    Usage(String),
    /// The rendered report of a sweep that found a counterexample.
    VerifyFailed(String),
}

impl From<heckechar::Error> for Failure {
    fn from(e: heckechar::Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        use heckechar::Error;
        match self {
            Failure::VerifyFailed(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Lib(Error::Unsupported(_)) => 3,
            Failure::Lib(Error::BoundExceeded { .. }) => 4,
            Failure::Lib(_) => 2,
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let settings =
        config::load(cli.config.as_deref(), |k| std::env::var(k).ok()).map_err(Failure::Usage)?;
    if let Some(n) = cli.threads.or(settings.threads) {
        // A pool can only be installed once; later calls keep the first.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let bounds = settings.bounds;
    match cli.command {
        Command::Char(a) => commands::char_cmd(&a, &bounds),
        Command::Table(a) => commands::table_cmd(&a, &bounds),
        Command::Verify(a) => commands::verify_cmd(&a, &bounds),
        Command::Expand(a) => commands::expand_cmd(&a, &bounds),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            match &f {
                Failure::Lib(e) => eprintln!("error: {e}"),
                Failure::Usage(e) => eprintln!("error: {e}"),
                Failure::VerifyFailed(out) => print!("{out}"),
            }
            ExitCode::from(f.code())
        }
    }
}
