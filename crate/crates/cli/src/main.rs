//! `hardy-means` command-line front end.

mod args;
mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hardy_means::{Error, Result};

use args::{Cli, Command};
use commands::Outcome;

const EXIT_PROPERTY: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

/// Sizes the global rayon pool from `HARDY_MEANS_THREADS`.
fn configure_threads() -> Result<()> {
    let threads = match std::env::var("HARDY_MEANS_THREADS") {
        Ok(v) if v.trim().is_empty() => 0,
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            Error::domain(format!("HARDY_MEANS_THREADS must be a count, got {v:?}"))
        })?,
        Err(_) => 0,
    };
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome> {
    configure_threads()?;
    let f = cli.format;
    match &cli.command {
        Command::Mean(a) => commands::mean(a, f),
        Command::HardySum(a) => commands::hardy_sum(a, f),
        Command::EstimateConstant(a) => commands::estimate_constant(a, f),
        Command::Classify(a) => commands::classify_cmd(a, f),
        Command::Verify(a) => commands::verify(a, f),
        Command::Bench(a) => commands::bench(a, f),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    written.map_err(|e| Error::domain(format!("cannot write output: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_DOMAIN),
            };
        }
    };
    let result = run(&cli).and_then(|outcome| {
        emit(&cli, &outcome.text)?;
        Ok(outcome.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(EXIT_PROPERTY),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_capacity() {
                if matches!(cli.command, Command::Mean(_)) {
                    eprintln!("hint: pass --samples N to estimate the mean by Monte Carlo");
                }
                ExitCode::from(EXIT_CAPACITY)
            } else {
                ExitCode::from(EXIT_DOMAIN)
            }
        }
    }
}
