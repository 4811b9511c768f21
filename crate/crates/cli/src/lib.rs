//! Command-line front end: simulate models, estimate extremograms,
//! extremal indices and extremal periodograms from CSV data, build bands,
//! evaluate reference values and regenerate figure data.
//!
//! Every run that writes to `--output FILE` also writes `FILE.config`, the
//! fully resolved configuration; `extremo --config FILE.config` repeats the
//! run.

pub mod commands;
pub mod config;
pub mod error;
pub mod figures;
mod output;
pub mod parse;

use std::ffi::OsString;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};

use commands::*;
use error::{CliError, CliResult};
use figures::FigureArgs;

#[derive(Parser, Debug)]
#[command(name = "extremo", version, about = "Extremal dependence analysis for time series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simulate a model and write the path as CSV.
    #[command(args_override_self = true)]
    Simulate(SimulateArgs),
    /// Sample extremogram of one column.
    #[command(args_override_self = true)]
    Extremogram(ExtremogramArgs),
    /// Sample cross-extremogram of two columns.
    #[command(args_override_self = true)]
    Crossgram(CrossgramArgs),
    /// Blocks estimate of the extremal index.
    #[command(args_override_self = true)]
    Index(IndexArgs),
    /// Gaussian quasi-likelihood fit of a GARCH(1,1).
    #[command(args_override_self = true)]
    Garchfit(GarchfitArgs),
    /// Extremal periodogram, smoothed estimate and simultaneous band.
    #[command(args_override_self = true)]
    Spectral(SpectralArgs),
    /// Permutation or bootstrap bands for the extremogram.
    #[command(args_override_self = true)]
    Bands(BandsArgs),
    /// Reference values from closed forms, quadrature or Monte Carlo.
    #[command(args_override_self = true)]
    Oracle(OracleArgs),
    /// Data for one of the figures.
    #[command(args_override_self = true)]
    Figure(FigureArgs),
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Simulate(a) => &a.common,
            Command::Extremogram(a) => &a.common,
            Command::Crossgram(a) => &a.common,
            Command::Index(a) => &a.common,
            Command::Garchfit(a) => &a.common,
            Command::Spectral(a) => &a.common,
            Command::Bands(a) => &a.common,
            Command::Oracle(a) => &a.common,
            Command::Figure(a) => &a.common,
        }
    }

    fn execute(&self) -> CliResult<()> {
        match self {
            Command::Simulate(a) => run_simulate(a),
            Command::Extremogram(a) => run_extremogram(a),
            Command::Crossgram(a) => run_crossgram(a),
            Command::Index(a) => run_index(a),
            Command::Garchfit(a) => run_garchfit(a),
            Command::Spectral(a) => run_spectral(a),
            Command::Bands(a) => run_bands(a),
            Command::Oracle(a) => run_oracle(a),
            Command::Figure(a) => figures::run_figure(a),
        }
    }
}

/// Parse `argv` (program name first), run the command, and write the
/// resolved-config sidecar next to the output.
pub fn run(argv: Vec<OsString>) -> CliResult<()> {
    let argv = config::expand_args(argv)?;
    let cmd = Cli::command();
    let matches = cmd.clone().try_get_matches_from(argv)?;
    let cli = Cli::from_arg_matches(&matches)?;
    let (name, sub_matches) = matches.subcommand().expect("a subcommand is required");
    let sub_cmd = cmd.find_subcommand(name).expect("parsed subcommand exists");
    let sidecar = config::resolved_config(name, sub_cmd, sub_matches);

    let common = cli.command.common();
    match common.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| CliError::Config(format!("--threads {t}: {e}")))?
            .install(|| cli.command.execute())?,
        None => cli.command.execute()?,
    }
    if let Some(out) = &common.output {
        output::write_text(&config::sidecar_path(out), &sidecar)?;
    }
    Ok(())
}
