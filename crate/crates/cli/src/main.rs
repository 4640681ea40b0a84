use std::process::ExitCode;

use clap::{error::ErrorKind, CommandFactory, Parser};
use involution_model_cli::{run, Command, OutputFormat, RunConfig, SOFT_CAP};

/// Builds the involution model of the symmetric group and checks its
/// properties by exact computation.
#[derive(Parser, Debug)]
#[command(name = "involution-model", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,

    /// Degree of the symmetric group.
    #[arg(long)]
    n: usize,

    /// Number of transpositions in the source class.
    #[arg(long)]
    j: Option<usize>,

    /// Number of transpositions in the target class (orbits only; defaults to j).
    #[arg(long)]
    k: Option<usize>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Include per-check elapsed milliseconds in JSON output.
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        command: cli.command,
        n: cli.n,
        j: cli.j,
        k: cli.k,
        seed: cli.seed,
        format: cli.format,
        timings: cli.timings,
    };
    if let Err(err) = config.validate() {
        Cli::command().error(ErrorKind::ValueValidation, err).exit();
    }
    if config.n > SOFT_CAP {
        eprintln!(
            "warning: n = {} is above {SOFT_CAP}; expect long runtimes",
            config.n
        );
    }
    match run(&config) {
        Ok(report) => {
            print!("{}", report.render());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
