use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coxsph::harness::{self, Experiment, Oracle};
use coxsph::typea::Composition;
use coxsph::Error;

#[derive(Parser)]
#[command(
    name = "coxsph",
    version,
    about = "Spherical elements of finite Coxeter groups and split key expansions"
)]
struct Cli {
    /// Cross-check closed forms and alternative algorithms along the way.
    #[arg(long, global = true)]
    paranoid: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide maximal sphericality of every element of a group.
    Census {
        /// Cartan type such as A4, B3, D4, F4 or I2(5).
        cartan_type: String,
        /// Allow groups with more than 2000 elements.
        #[arg(long)]
        slow: bool,
        /// Write the full census as JSON.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Decide I-sphericality of one element.
    Check {
        cartan_type: String,
        /// One-line notation (type A) or a word such as "s1 s2 s3".
        element: String,
        /// Comma separated subset of the left descents.
        #[arg(long = "I", value_name = "CSV", default_value = "")]
        subset: String,
    },
    /// Expand a key polynomial in the split Schur basis.
    KeyExpand {
        /// Composition such as "(1,5,2,4,3)".
        composition: String,
        /// Comma separated split positions.
        #[arg(long = "D", value_name = "CSV", default_value = "")]
        split: String,
        #[arg(long, default_value = "peel", value_parser = ["peel", "ry"])]
        oracle: String,
        /// Compute with both oracles and fail when they differ.
        #[arg(long)]
        cross_check: bool,
        /// Print the expansion as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Compare the witness search with the staircase test on all of S_n.
    VerifyConsistency {
        #[arg(long)]
        n: usize,
        /// Allow n = 6.
        #[arg(long)]
        slow: bool,
    },
    /// Collect data on one of the open conjectures.
    Experiment {
        /// pattern-avoidance, vanishing-density, upone or distinct-lambda.
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<(), Failure> {
    let paranoid = cli.paranoid;
    match cli.command {
        Command::Census {
            cartan_type,
            slow,
            json,
        } => {
            let sys = harness::parse_type(&cartan_type)?;
            if slow {
                eprintln!(
                    "enumerating {} ({} elements)",
                    sys.cartan_type(),
                    sys.order()
                );
            }
            let report = harness::run_census(&sys, slow, paranoid)?;
            emit(&report.to_string());
            eprintln!("elapsed {:.3} s", report.elapsed.as_secs_f64());
            if let Some(path) = json {
                std::fs::write(&path, report.to_json())
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            if report.discrepancy() {
                return Err(Failure::Verification(format!(
                    "census count differs from the expected {}",
                    report.expected_nonspherical.unwrap_or_default()
                )));
            }
        }
        Command::Check {
            cartan_type,
            element,
            subset,
        } => {
            let sys = harness::parse_type(&cartan_type)?;
            let subset = harness::parse_labels(&subset)?;
            emit(&harness::run_check(&sys, &element, &subset, paranoid)?.to_string());
        }
        Command::KeyExpand {
            composition,
            split,
            oracle,
            cross_check,
            json,
        } => {
            let alpha: Composition = composition.parse()?;
            let cuts = harness::parse_labels(&split)?;
            let oracle: Oracle = oracle.parse()?;
            let expansion = harness::run_key_expand(&alpha, &cuts, oracle, cross_check, paranoid)?;
            if json {
                emit(&format!("{}\n", expansion.to_json()));
            } else {
                emit(&format!("{} terms\n{expansion}\n", expansion.len()));
            }
        }
        Command::VerifyConsistency { n, slow } => {
            let report = harness::verify_consistency(n, slow)?;
            emit(&report.to_string());
            eprintln!("elapsed {:.3} s", report.elapsed.as_secs_f64());
            if !report.disagreements.is_empty() {
                return Err(Failure::Verification(format!(
                    "{} disagreements",
                    report.disagreements.len()
                )));
            }
        }
        Command::Experiment { name, n, seed } => {
            let exp: Experiment = name.parse()?;
            emit(&harness::run_experiment(exp, n, seed)?.to_string());
        }
    }
    Ok(())
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
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
