//! `engel`: sequences, continued fractions and growth diagnostics for Engel
//! series with square-divisible terms.

mod commands;
mod golden;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use engel_core::{BitBudget, Error, ErrorKind};

use crate::input::InputArgs;

#[derive(Parser, Debug)]
#[command(name = "engel", version, about)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Total bit budget for generated integers
    #[arg(long, global = true, default_value_t = 67_108_864, value_parser = clap::value_parser!(u64).range(1..))]
    bits: u64,
    /// Working precision in decimal digits
    #[arg(long, global = true, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
    digits: u32,
    /// Write output to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate x_1..x_n (recurrences: their own terms from x_0)
    Gen {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        n: usize,
    },
    /// Continued fraction of the partial sum S_n
    Cf {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        n: usize,
        /// Cross-check against the Euclidean expansion of S_n
        #[arg(long, value_parser = ["oracle"])]
        check: Option<String>,
    },
    /// Certified coefficients a_0..a_K of the full series
    Stream {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "K", value_name = "K")]
        k: usize,
    },
    /// Growth constant, log reconstruction and exponent brackets
    Asymp {
        #[command(flatten)]
        input: InputArgs,
        /// Number of report rows
        #[arg(long, default_value_t = 8)]
        n: usize,
        /// Slack in the growth condition x_{n+1} > x_n^(lambda - epsilon)
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
    },
    /// Run an invariant suite
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        maxn: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest index for input-driven suites
        #[arg(long)]
        n: Option<usize>,
    },
    /// Reproduce the worked examples and compare with their printed values
    PaperExamples {
        /// Run a single group: nex, nexlift, example1, mrec, kempner,
        /// kempner-u3..kempner-u10, kempner-u2, shallit
        #[arg(long)]
        only: Option<String>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Validation => 2,
        ErrorKind::Budget => 3,
        ErrorKind::Invariant => 4,
    }
}

fn run(cli: &Cli) -> engel_core::Result<commands::Output> {
    let budget = BitBudget::with_total(cli.bits);
    let ctx = commands::Context {
        json: cli.json,
        budget,
        digits: cli.digits,
    };
    match &cli.command {
        Command::Gen { input, n } => commands::gen(&ctx, &input.require()?, *n),
        Command::Cf { input, n, check } => commands::cf(&ctx, &input.require()?, *n, check.is_some()),
        Command::Stream { input, k } => commands::stream(&ctx, &input.require()?, *k),
        Command::Asymp { input, n, epsilon } => commands::asymp(&ctx, &input.require()?, *n, *epsilon),
        Command::Verify {
            suite,
            input,
            trials,
            maxn,
            seed,
            n,
        } => verify::run(
            &ctx,
            &verify::Options {
                suite: *suite,
                input: input.resolve()?,
                trials: *trials,
                maxn: *maxn,
                seed: *seed,
                n: *n,
            },
        ),
        Command::PaperExamples { only } => golden::run(&ctx, only.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output.text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", output.text);
            }
            if output.failed {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn exit_codes_follow_error_kind() {
        assert_eq!(exit_code(&Error::TrailingZero), 2);
        assert_eq!(exit_code(&Error::BitBudgetExceeded { needed: 9, cap: 8 }), 3);
        assert_eq!(exit_code(&Error::IdentityViolation { identity: "x", n: 3 }), 4);
    }
}
