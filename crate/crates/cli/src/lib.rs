//! Command-line front end for the coordination-compression simulator.
//!
//! Subcommands map to the experiments: `sweep`, `heatmap`, `robustness`,
//! and `props`. Configuration comes from a flat `key = value` file plus
//! flag overrides; results land as CSV (and optional SVG line charts) in
//! the output directory.
//!
//! Exit codes: 0 success, 1 configuration error, 2 runtime error, 3 when
//! `props` finds a failing proposition.

pub mod app;
pub mod config;
pub mod csv;
pub mod svg;

use clap::error::ErrorKind;
use clap::Parser;
use std::process::ExitCode;

/// Parse the command line and dispatch; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = match app::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match app::execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
