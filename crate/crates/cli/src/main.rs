//! `facedist`: batch experiments on random map embeddings, class products
//! and hook characters.
//!
//! Exit codes: 0 success, 2 capacity refusal, 3 invariant violation, 4 bad input.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::Failure;
use output::{Format, Status};

#[derive(Parser, Debug)]
#[command(
    name = "facedist",
    version,
    about = "Random embeddings, local face distributions and class products"
)]
struct Cli {
    /// Worker threads for sampling; results do not depend on it
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact face-count distribution over every map of a small graph
    Enumerate(commands::EnumerateArgs),
    /// Law of (n)·λ and its distance to the parity-matched uniform distribution
    Classprod(commands::ClassprodArgs),
    /// Sampled local face distribution at one vertex of K_n
    Localface(commands::LocalfaceArgs),
    /// Statistics of K_n maps grown from K_{n-1} maps
    Knextend(commands::KnextendArgs),
    /// Exhaustive hook character ratio sweep
    Charcheck(commands::CharcheckArgs),
    /// Faces, genus and local permutations of a map given as JSON
    Inspect(commands::InspectArgs),
}

const EXIT_CAPACITY: u8 = 2;
const EXIT_VIOLATION: u8 = 3;
const EXIT_BAD_INPUT: u8 = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_BAD_INPUT),
            };
        }
    };
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }

    let report = match &cli.command {
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Classprod(a) => commands::classprod(a),
        Command::Localface(a) => commands::localface(a),
        Command::Knextend(a) => commands::knextend(a),
        Command::Charcheck(a) => commands::charcheck(a),
        Command::Inspect(a) => commands::inspect(a),
    };
    let report = match report {
        Ok(r) => r,
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_CAPACITY);
        }
        Err(Failure::BadInput(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_BAD_INPUT);
        }
    };

    if let Err(e) = output::emit(&report.render(cli.format), cli.out.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_BAD_INPUT);
    }
    match report.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Violation => {
            eprintln!("error: invariant violated; see the output for the failing rows");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}
