//! `dhurwitz`: compute, verify and tabulate double Hurwitz numbers.
//!
//! Results go to stdout as JSON, CSV or plain text. Progress and
//! verification reports go to stderr.

mod commands;
mod failure;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use double_hurwitz::characters::CharacterCache;

use failure::CliError;
use output::Format;

/// Environment variable naming the character cache directory.
pub const CACHE_ENV: &str = "DHURWITZ_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "dhurwitz", version, about = "Exact double Hurwitz numbers")]
struct Cli {
    /// Directory for cached character tables. Loaded at start and
    /// refreshed on exit.
    #[arg(long, global = true, env = CACHE_ENV, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one Hurwitz number.
    Compute(ComputeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Evaluate a coefficient symbol both ways.
    Symbol(SymbolArgs),
    /// Sample a ray t -> (t alpha, t beta) and fit its polynomial.
    Ray(RayArgs),
    /// Export the series coefficients of the generating function.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct Input {
    #[arg(long, allow_hyphen_values = true)]
    genus: i64,
    /// Comma-separated parts, in any order.
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// A closed form when one applies, else the character sum; a second
    /// method cross-checks when it is cheap.
    Auto,
    Brute,
    Character,
    Closed,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Largest number of transposition sequences brute force may visit.
    #[arg(long, default_value_t = 100_000_000)]
    work_limit: u128,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(double_hurwitz::verify::Suite::NAMES))]
    suite: String,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    dmax: u32,
    #[arg(long, default_value_t = 3)]
    gmax: u32,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    rmax: u32,
    /// `json` also writes the reports to stdout.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args, Debug)]
struct SymbolArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    k: u32,
    /// Comma-separated insertion indices, zeros allowed.
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RayMethod {
    Character,
    Brute,
    OnePart,
}

#[derive(Args, Debug)]
struct RayArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    t_max: u32,
    #[arg(long, value_enum, default_value_t = RayMethod::Character)]
    method: RayMethod,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    dmax: u32,
    #[arg(long, default_value_t = 6)]
    rmax: u32,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Export the connected series instead of the disconnected one.
    #[arg(long)]
    connected: bool,
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(dir) = &cli.cache_dir {
        let loaded = CharacterCache::global().load_dir(dir)?;
        if loaded > 0 {
            eprintln!(
                "loaded {loaded} character cache files from {}",
                dir.display()
            );
        }
    }
    let result = match cli.command {
        Command::Compute(a) => commands::compute(&a.input, a.method, a.format, a.work_limit),
        Command::Verify(a) => commands::verify(&a.suite, a.dmax, a.gmax, a.rmax, a.format),
        Command::Symbol(a) => commands::symbol(a.genus, a.k, &a.b, a.format),
        Command::Ray(a) => commands::ray(&a.input, a.t_max, a.method, a.format),
        Command::Table(a) => commands::table(a.dmax, a.rmax, a.out.as_deref(), a.connected),
    };
    if let Some(dir) = &cli.cache_dir {
        if let Err(e) = CharacterCache::global().save_dir(dir) {
            eprintln!("warning: could not write character cache: {e}");
        }
    }
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_errors = matches!(
        &cli.command,
        Command::Compute(ComputeArgs {
            format: Format::Json,
            ..
        }) | Command::Symbol(SymbolArgs {
            format: Format::Json,
            ..
        }) | Command::Ray(RayArgs {
            format: Format::Json,
            ..
        })
    );
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if json_errors {
                println!("{}", e.to_json());
            }
            ExitCode::from(e.exit_code())
        }
    }
}
