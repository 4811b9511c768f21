//! Data behind the figures: blocks-estimator grids for an AR(1) with
//! Student-t noise, a max-moving path, and extremogram and spectral
//! curves for simulated GARCH(1,1) returns.

use std::path::Path;

use clap::{Args, ValueEnum};

use extremo::inference::{permutation_band_lag1, ExtremogramConfig};
use extremo::simulate::{sim_ar1, sim_garch11, sim_max_moving, Garch11Params, MaxStableOptions, NoiseSpec, DEFAULT_BURN_IN};
use extremo::timedomain::{blocks_extremal_index, garch11_fit, garch_filter};
use extremo::{derive_stream, DensitySpec, Functional, SeriesMatrix, TailSet, ThresholdSpec};

use crate::commands::{spectral_curve, write_extremogram, write_spectral, Common};
use crate::error::{config, CliError, CliResult};
use crate::output::{num, write_table};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    #[value(name = "fig1")]
    Fig1,
    #[value(name = "fig2")]
    Fig2,
    #[value(name = "fig4_sim")]
    Fig4Sim,
    #[value(name = "fig6_sim")]
    Fig6Sim,
}

#[derive(Args, Debug, Clone)]
pub struct FigureArgs {
    #[arg(long, value_enum)]
    pub name: Figure,
    /// Sample size; each figure has its own default.
    #[arg(long)]
    pub n: Option<usize>,
    /// Permutations for the bands; each figure has its own default.
    #[arg(long)]
    pub n_perm: Option<usize>,
    /// Output directory (`--output`).
    #[command(flatten)]
    pub common: Common,
}

const GARCH: Garch11Params = Garch11Params { alpha0: 1e-6, alpha1: 0.1, beta1: 0.88 };

pub(crate) fn run_figure(a: &FigureArgs) -> CliResult<()> {
    let dir = a.common.output.as_deref().ok_or_else(|| config("figure needs --output DIR"))?;
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    let seed = a.common.seed;
    match a.name {
        Figure::Fig1 => fig1(dir, a.n.unwrap_or(1000), seed),
        Figure::Fig2 => fig2(dir, a.n.unwrap_or(20_000), seed),
        Figure::Fig4Sim => fig4(dir, a.n.unwrap_or(20_000), a.n_perm.unwrap_or(99), seed),
        Figure::Fig6Sim => fig6(dir, a.n.unwrap_or(31_757), a.n_perm.unwrap_or(10_000), seed),
    }
}

fn fig1(dir: &Path, n: usize, seed: u64) -> CliResult<()> {
    let x = sim_max_moving(&DensitySpec::standard_normal(), 5.0, n, &MaxStableOptions::default(), &mut derive_stream(seed, 11))?;
    let rows: Vec<Vec<String>> = x.column(0).iter().enumerate().map(|(t, v)| vec![(t + 1).to_string(), num(*v)]).collect();
    write_table(Some(&dir.join("fig1_path.csv")), &["t", "x"], &rows)
}

/// Blocks estimate at block size `s` and the upper `u` percent.
fn theta_row(x: &SeriesMatrix, s: usize, u: f64) -> CliResult<Vec<String>> {
    let up = TailSet::upper(1.0)?;
    let est = blocks_extremal_index(x, s, &up, &ThresholdSpec::quantile(1.0 - u / 100.0, Functional::Upper))?;
    Ok(vec![s.to_string(), num(u), num(est.theta), est.blocks.to_string(), est.exceedances.to_string()])
}

pub(crate) fn fig2_series(n: usize, seed: u64) -> CliResult<SeriesMatrix> {
    Ok(sim_ar1(0.8, &NoiseSpec::StudentT { dof: 2.0 }, n, DEFAULT_BURN_IN, &mut derive_stream(seed, 12))?)
}

fn fig2(dir: &Path, n: usize, seed: u64) -> CliResult<()> {
    let x = fig2_series(n, seed)?;
    let header = ["s", "u_percent", "theta_hat", "K", "N"];
    let mut grid = Vec::new();
    for s in 1..=50 {
        for k in 1..=20 {
            grid.push(theta_row(&x, s, 0.5 * k as f64)?);
        }
    }
    write_table(Some(&dir.join("fig2_grid.csv")), &header, &grid)?;
    let fixed_u = (1..=100).map(|s| theta_row(&x, s, 2.0)).collect::<CliResult<Vec<_>>>()?;
    write_table(Some(&dir.join("fig2_fixed_u.csv")), &header, &fixed_u)?;
    let fixed_s = (1..=100).map(|k| theta_row(&x, 24, k as f64 / 10.0)).collect::<CliResult<Vec<_>>>()?;
    write_table(Some(&dir.join("fig2_fixed_s.csv")), &header, &fixed_s)
}

fn garch_series(dir: &Path, name: &str, n: usize, seed: u64, stream: u64) -> CliResult<SeriesMatrix> {
    let (x, sigma) = sim_garch11(&GARCH, &NoiseSpec::standard_normal(), n, DEFAULT_BURN_IN, &mut derive_stream(seed, stream))?;
    let rows: Vec<Vec<String>> =
        x.column(0).iter().zip(sigma.column(0)).map(|(x, s)| vec![num(*x), num(s)]).collect();
    write_table(Some(&dir.join(name)), &["x", "sigma"], &rows)?;
    Ok(x)
}

fn losses(max_lag: usize) -> CliResult<ExtremogramConfig> {
    let low = TailSet::lower(1.0)?;
    Ok(ExtremogramConfig { a: low.clone(), b: low, threshold: ThresholdSpec::quantile(0.96, Functional::Lower), max_lag })
}

fn fig4(dir: &Path, n: usize, n_perm: usize, seed: u64) -> CliResult<()> {
    let x = garch_series(dir, "fig4_series.csv", n, seed, 13)?;
    let cfg = losses(40)?;
    let mut raw = cfg.estimate(&x)?;
    raw.band = Some(vec![permutation_band_lag1(&x, &cfg, n_perm, 0.98, &derive_stream(seed, 14))?; 41]);
    write_extremogram(Some(&dir.join("fig4_raw.csv")), &raw)?;

    let fit = garch11_fit(&x, None)?;
    let row = vec![num(fit.alpha0), num(fit.alpha1), num(fit.beta1), num(fit.loglik), fit.converged.to_string()];
    write_table(Some(&dir.join("fig4_fit.csv")), &["alpha0", "alpha1", "beta1", "loglik", "converged"], &[row])?;

    let z = garch_filter(&x, &fit)?;
    let mut filtered = cfg.estimate(&z)?;
    filtered.band = Some(vec![permutation_band_lag1(&z, &cfg, n_perm, 0.98, &derive_stream(seed, 15))?; 41]);
    write_extremogram(Some(&dir.join("fig4_filtered.csv")), &filtered)
}

fn fig6(dir: &Path, n: usize, n_perm: usize, seed: u64) -> CliResult<()> {
    let x = garch_series(dir, "fig6_series.csv", n, seed, 16)?;
    let low = TailSet::lower(1.0)?;
    let th = ThresholdSpec::quantile(0.96, Functional::Lower);
    let curve = spectral_curve(&x, &low, &th, Some(52), n_perm, 0.95, seed)?;
    write_spectral(Some(&dir.join("fig6_spectral.csv")), &curve)
}
