//! `ddosc`: spectra, level-diagram tables and verification reports for the
//! Darboux III and Dunkl oscillators.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CurvatureArgs, FigureArgs, SpectrumArgs, VerifyArgs};

/// Units default to ħ = ω = 1. Field strengths B from level diagrams map to
/// the Larmor frequency as ω_c = B/2 (e = c = 1).
#[derive(Debug, Parser)]
#[command(name = "ddosc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form energy levels, sorted by energy
    Spectrum(SpectrumArgs),
    /// Long-format level table over a λ, B or ω_c sweep
    LevelsFigure(FigureArgs),
    /// Cross-check closed forms against the numerical oracle; exit 1 on any failure
    Verify(VerifyArgs),
    /// Metric factor and scalar curvature at given x² values
    Curvature(CurvatureArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let rendered = e.to_string();
            eprintln!(
                "{}",
                rendered
                    .lines()
                    .next()
                    .unwrap_or("error: invalid arguments")
            );
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Spectrum(a) => commands::spectrum(a).map(|()| true),
        Command::LevelsFigure(a) => commands::levels_figure(a).map(|()| true),
        Command::Verify(a) => commands::verify(a),
        Command::Curvature(a) => commands::curvature(a).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let chain: Vec<String> = e.chain().map(|c| c.to_string()).collect();
            eprintln!("error: {}", chain.join(": "));
            ExitCode::from(2)
        }
    }
}
