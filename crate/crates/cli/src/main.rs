//! `szeged`: compute, build, enumerate, search and verify from the shell.
//!
//! Exit codes: 0 pass, 1 violation or disagreement, 2 parse, usage or I/O
//! error, 3 disconnected input, 4 infeasible parameters, 5 cap exceeded.

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => ExitCode::from(outcome.code()),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}
