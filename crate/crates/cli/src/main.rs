//! Command-line front end for the tPT Dirac bound-state solver.
//!
//! Exit codes: 0 success, 1 configuration error, 2 no root or
//! non-convergence, 3 comparison mismatch.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::process::ExitCode;
use tptdirac_cli::commands;
use tptdirac_cli::{AimCheckArgs, PotentialArgs, SolveArgs, TableArgs, WavefnArgs};

#[derive(Parser, Debug)]
#[command(name = "tptdirac", version, about = "Relativistic tPT bound states under spin and pseudo-spin symmetry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve bound-state energies for one or more (n, kappa) states.
    Solve(SolveArgs),
    /// Regenerate a bundled reference table; `--compare` diffs against the
    /// printed values and documents misprint candidates.
    Table(TableArgs),
    /// Export a sampled two-component radial wavefunction as CSV.
    Wavefn(WavefnArgs),
    /// Export the potential profile as CSV.
    Potential(PotentialArgs),
    /// Cross-check AIM roots against the closed-form spectrum.
    AimCheck(AimCheckArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let code = match cli.command {
        Command::Solve(args) => commands::solve::run(args),
        Command::Table(args) => commands::table::run(args),
        Command::Wavefn(args) => commands::wavefn::run(args),
        Command::Potential(args) => commands::potential::run(args),
        Command::AimCheck(args) => commands::aim_check::run(args),
    };
    ExitCode::from(code)
}
