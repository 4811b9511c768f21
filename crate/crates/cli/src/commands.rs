use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use extremo::freqdomain::{
    default_half_width, extremal_periodogram, smoothed_periodogram, spectral_band, standardize_periodogram,
    SpectralCurve, Window,
};
use extremo::inference::{
    bootstrap_band, cross_permutation_band, permutation_band_lag1, permutation_band_per_lag,
    permutation_band_simultaneous, ExtremogramConfig,
};
use extremo::oracle::{
    kesten_alpha, maxmoving_extremal_index, maxmoving_extremogram, maxmoving_pre_extremogram, rho_linear,
    rho_sre_mc, spectral_density_oracle, OracleValue,
};
use extremo::simulate::{
    simulate, Garch11Params, MaxStableOptions, ModelSpec, NoiseSpec, SimOptions, Variogram, DEFAULT_BURN_IN,
    DEFAULT_POINT_BUDGET, DEFAULT_TRUNC_EPS,
};
use extremo::timedomain::{
    blocks_extremal_index, cross_extremogram, garch11_fit, garch_volatility, ExtremogramCurve,
};
use extremo::{derive_stream, DensitySpec, SeriesMatrix, TailSet, ThresholdSpec};

use crate::error::{config, CliResult};
use crate::output::{num, opt, pick, read_column, read_matrix, write_table};
use crate::parse;

pub const SIMULATE_STREAM: u64 = 1;
pub const BAND_STREAM: u64 = 2;
pub const CROSS_BAND_STREAM: u64 = 3;
pub const SPECTRAL_BAND_STREAM: u64 = 4;
pub const ORACLE_STREAM: u64 = 5;

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Master seed; every random draw derives from it.
    #[arg(long, env = "EXTREMO_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (results do not depend on it).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Output CSV; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    #[arg(short, long)]
    pub input: PathBuf,
    /// Zero-based column of the input CSV.
    #[arg(long, default_value_t = 0)]
    pub column: usize,
}

impl Input {
    fn read(&self) -> CliResult<SeriesMatrix> {
        read_column(&self.input, self.column)
    }
}

/// Coefficient list parsed from `1,0.5` or `geometric:PHI:LEN`.
#[derive(Debug, Clone, PartialEq)]
pub struct Psi(pub Vec<f64>);

fn psi_parser(s: &str) -> Result<Psi, String> {
    parse::psi(s).map(Psi)
}

fn threshold(q: f64, absolute: Option<f64>, tail: &TailSet) -> ThresholdSpec {
    match absolute {
        Some(a) => ThresholdSpec::Absolute(a),
        None => ThresholdSpec::quantile(q, tail.natural_functional()),
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str, model: &str) -> CliResult<T> {
    v.ok_or_else(|| config(format!("--{flag} is required for {model}")))
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Ar1,
    Linear,
    Sre,
    Garch,
    Sv,
    MaxMoving,
    BrownResnick,
}

#[derive(Args, Debug, Clone)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = DEFAULT_BURN_IN)]
    pub burn_in: usize,
    #[arg(long, default_value = "normal:0:1", value_parser = parse::noise)]
    pub noise: NoiseSpec,
    /// AR(1) coefficient.
    #[arg(long)]
    pub phi: Option<f64>,
    #[arg(long, value_parser = psi_parser)]
    pub psi: Option<Psi>,
    /// Noise history kept by the linear filter; defaults to `len(psi)`.
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Law of the multiplier `A` of the stochastic recurrence.
    #[arg(long, value_parser = parse::noise)]
    pub a_noise: Option<NoiseSpec>,
    /// Law of the innovation `B` of the stochastic recurrence.
    #[arg(long, value_parser = parse::noise)]
    pub b_noise: Option<NoiseSpec>,
    #[arg(long)]
    pub alpha0: Option<f64>,
    #[arg(long)]
    pub alpha1: Option<f64>,
    #[arg(long)]
    pub beta1: Option<f64>,
    #[arg(long)]
    pub vol_phi: Option<f64>,
    #[arg(long)]
    pub vol_sigma: Option<f64>,
    #[arg(long, default_value = "normal:1", value_parser = parse::density)]
    pub density: DensitySpec,
    #[arg(long, default_value = "brownian:1", value_parser = parse::variogram)]
    pub variogram: Variogram,
    /// Fréchet index of the max-stable margins.
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TRUNC_EPS)]
    pub trunc_eps: f64,
    #[arg(long)]
    pub window_pad: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_POINT_BUDGET)]
    pub point_budget: usize,
    #[command(flatten)]
    pub common: Common,
}

impl SimulateArgs {
    pub fn model_spec(&self) -> CliResult<ModelSpec> {
        Ok(match self.model {
            Model::Ar1 => ModelSpec::Ar1 { phi: require(self.phi, "phi", "ar1")?, noise: self.noise },
            Model::Linear => {
                let psi = self.psi.clone().ok_or_else(|| config("--psi is required for linear"))?.0;
                let truncation = self.truncation.unwrap_or(psi.len());
                ModelSpec::Linear { psi, noise: self.noise, truncation }
            }
            Model::Sre => ModelSpec::Sre {
                a: require(self.a_noise, "a-noise", "sre")?,
                b: require(self.b_noise, "b-noise", "sre")?,
            },
            Model::Garch => ModelSpec::Garch11 {
                params: Garch11Params {
                    alpha0: require(self.alpha0, "alpha0", "garch")?,
                    alpha1: require(self.alpha1, "alpha1", "garch")?,
                    beta1: require(self.beta1, "beta1", "garch")?,
                },
                noise: self.noise,
            },
            Model::Sv => ModelSpec::Sv {
                vol_phi: require(self.vol_phi, "vol-phi", "sv")?,
                vol_sigma: require(self.vol_sigma, "vol-sigma", "sv")?,
                noise: self.noise,
            },
            Model::MaxMoving => {
                ModelSpec::MaxMoving { density: self.density, alpha: require(self.alpha, "alpha", "max-moving")? }
            }
            Model::BrownResnick => ModelSpec::BrownResnick {
                variogram: self.variogram,
                alpha: require(self.alpha, "alpha", "brown-resnick")?,
            },
        })
    }

    pub fn sim_options(&self) -> SimOptions {
        SimOptions {
            burn_in: self.burn_in,
            max_stable: MaxStableOptions {
                trunc_eps: self.trunc_eps,
                window_pad: self.window_pad,
                point_budget: self.point_budget,
            },
        }
    }
}

pub(crate) fn run_simulate(a: &SimulateArgs) -> CliResult<()> {
    let model = a.model_spec()?;
    let sim = simulate(&model, a.n, &a.sim_options(), &mut derive_stream(a.common.seed, SIMULATE_STREAM))?;
    let x = sim.series.column(0);
    let (header, rows): (Vec<&str>, Vec<Vec<String>>) = match &sim.sigma {
        Some(s) => {
            let s = s.column(0);
            (vec!["x", "sigma"], x.iter().zip(&s).map(|(x, s)| vec![num(*x), num(*s)]).collect())
        }
        None => (vec!["x"], x.iter().map(|x| vec![num(*x)]).collect()),
    };
    write_table(a.common.output.as_deref(), &header, &rows)
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandKind {
    None,
    Perm,
    Boot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// The lag-1 permutation band drawn across all lags.
    Lag1,
    PerLag,
    /// One band covering lags 1..H simultaneously.
    Simultaneous,
}

#[derive(Args, Debug, Clone)]
pub struct BandArgs {
    #[arg(long, value_enum, default_value_t = BandKind::None)]
    pub band: BandKind,
    /// Defaults to lag1 for permutation bands and per-lag for the bootstrap.
    #[arg(long, value_enum)]
    pub scope: Option<Scope>,
    #[arg(long, default_value_t = 99)]
    pub n_perm: usize,
    #[arg(long, default_value_t = 200)]
    pub n_boot: usize,
    /// Stationary-bootstrap jump probability (mean block length 1/p).
    #[arg(long, default_value_t = extremo::inference::DEFAULT_BLOCK_P)]
    pub p: f64,
    #[arg(long, default_value_t = 0.98)]
    pub confidence: f64,
}

/// Band per lag `0..=max_lag`, or `None` for `--band none`.
fn extremogram_band(
    series: &SeriesMatrix,
    cfg: &ExtremogramConfig,
    b: &BandArgs,
    seed: u64,
) -> CliResult<Option<Vec<(f64, f64)>>> {
    let rng = derive_stream(seed, BAND_STREAM);
    let h = cfg.max_lag + 1;
    Ok(match (b.band, b.scope) {
        (BandKind::None, _) => None,
        (BandKind::Perm, None | Some(Scope::Lag1)) => {
            Some(vec![permutation_band_lag1(series, cfg, b.n_perm, b.confidence, &rng)?; h])
        }
        (BandKind::Perm, Some(Scope::PerLag)) => {
            Some(permutation_band_per_lag(series, cfg, b.n_perm, b.confidence, &rng)?)
        }
        (BandKind::Perm, Some(Scope::Simultaneous)) => {
            Some(vec![permutation_band_simultaneous(series, cfg, b.n_perm, b.confidence, &rng)?; h])
        }
        (BandKind::Boot, None | Some(Scope::PerLag)) => {
            Some(bootstrap_band(series, cfg, b.n_boot, b.p, b.confidence, &rng)?.bands)
        }
        (BandKind::Boot, Some(s)) => {
            return Err(config(format!("bootstrap bands are per lag; --scope {s:?} is not available")))
        }
    })
}

const EXTREMOGRAM_HEADER: [&str; 7] = ["lag", "estimate", "numerator", "denominator", "band_lo", "band_hi", "oracle"];

pub(crate) fn extremogram_rows(curve: &ExtremogramCurve) -> Vec<Vec<String>> {
    (0..curve.lags.len())
        .map(|i| {
            let band = curve.band.as_ref().map(|b| b[i]);
            vec![
                curve.lags[i].to_string(),
                num(curve.estimates[i]),
                curve.numerators[i].to_string(),
                curve.denominator.to_string(),
                opt(band.map(|b| b.0)),
                opt(band.map(|b| b.1)),
                opt(curve.oracle.as_ref().map(|o| o[i])),
            ]
        })
        .collect()
}

pub(crate) fn write_extremogram(path: Option<&std::path::Path>, curve: &ExtremogramCurve) -> CliResult<()> {
    write_table(path, &EXTREMOGRAM_HEADER, &extremogram_rows(curve))
}

#[derive(Args, Debug, Clone)]
pub struct ExtremogramArgs {
    #[command(flatten)]
    pub input: Input,
    /// Conditioning set `A`.
    #[arg(long, default_value = "upper:1", value_parser = parse::tail)]
    pub tail: TailSet,
    /// Target set `B`; defaults to `A`.
    #[arg(long, value_parser = parse::tail)]
    pub tail_b: Option<TailSet>,
    /// Quantile level of the threshold.
    #[arg(long, default_value_t = 0.96)]
    pub q: f64,
    /// Absolute threshold; overrides `--q`.
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long, default_value_t = 40)]
    pub max_lag: usize,
    /// Oracle column for a linear process: coefficients of the filter.
    #[arg(long, value_parser = psi_parser)]
    pub oracle_psi: Option<Psi>,
    /// Tail index and upper-tail weight for `--oracle-psi`.
    #[arg(long, default_value_t = 1.0)]
    pub oracle_alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub oracle_p: f64,
    #[command(flatten)]
    pub band: BandArgs,
    #[command(flatten)]
    pub common: Common,
}

impl ExtremogramArgs {
    pub fn config(&self) -> ExtremogramConfig {
        ExtremogramConfig {
            a: self.tail.clone(),
            b: self.tail_b.clone().unwrap_or_else(|| self.tail.clone()),
            threshold: threshold(self.q, self.threshold, &self.tail),
            max_lag: self.max_lag,
        }
    }
}

pub(crate) fn run_extremogram(a: &ExtremogramArgs) -> CliResult<()> {
    let x = a.input.read()?;
    let cfg = a.config();
    let mut curve = cfg.estimate(&x)?;
    curve.band = extremogram_band(&x, &cfg, &a.band, a.common.seed)?;
    if let Some(psi) = &a.oracle_psi {
        curve.oracle = Some(
            (0..=a.max_lag)
                .map(|h| rho_linear(&psi.0, a.oracle_alpha, a.oracle_p, h).map(|v| v.value))
                .collect::<extremo::Result<_>>()?,
        );
    }
    write_extremogram(a.common.output.as_deref(), &curve)
}

#[derive(Args, Debug, Clone)]
pub struct BandsArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value = "upper:1", value_parser = parse::tail)]
    pub tail: TailSet,
    #[arg(long, value_parser = parse::tail)]
    pub tail_b: Option<TailSet>,
    #[arg(long, default_value_t = 0.96)]
    pub q: f64,
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long, default_value_t = 40)]
    pub max_lag: usize,
    #[arg(long, value_enum, default_value_t = Method::Perm)]
    pub method: Method,
    /// Number of permutations or bootstrap replicates.
    #[arg(long, default_value_t = 99)]
    pub n: usize,
    #[arg(long, default_value_t = extremo::inference::DEFAULT_BLOCK_P)]
    pub p: f64,
    #[arg(long, default_value_t = 0.98)]
    pub confidence: f64,
    #[arg(long, value_enum)]
    pub scope: Option<Scope>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Perm,
    Boot,
}

pub(crate) fn run_bands(a: &BandsArgs) -> CliResult<()> {
    let x = a.input.read()?;
    let cfg = ExtremogramConfig {
        a: a.tail.clone(),
        b: a.tail_b.clone().unwrap_or_else(|| a.tail.clone()),
        threshold: threshold(a.q, a.threshold, &a.tail),
        max_lag: a.max_lag,
    };
    let spec = BandArgs {
        band: match a.method {
            Method::Perm => BandKind::Perm,
            Method::Boot => BandKind::Boot,
        },
        scope: a.scope,
        n_perm: a.n,
        n_boot: a.n,
        p: a.p,
        confidence: a.confidence,
    };
    let band = extremogram_band(&x, &cfg, &spec, a.common.seed)?.expect("a band method is always set");
    let rows: Vec<Vec<String>> =
        band.iter().enumerate().map(|(h, (lo, hi))| vec![h.to_string(), num(*lo), num(*hi)]).collect();
    write_table(a.common.output.as_deref(), &["lag", "band_lo", "band_hi"], &rows)
}

#[derive(Args, Debug, Clone)]
pub struct CrossgramArgs {
    /// CSV with at least two columns.
    #[arg(short, long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub x_col: usize,
    #[arg(long, default_value_t = 1)]
    pub y_col: usize,
    #[arg(long, default_value = "upper:1", value_parser = parse::tail)]
    pub tail: TailSet,
    /// Set for `y`; defaults to `--tail`.
    #[arg(long, value_parser = parse::tail)]
    pub tail_y: Option<TailSet>,
    /// Quantile level used for both series.
    #[arg(long, default_value_t = 0.96)]
    pub q: f64,
    #[arg(long, default_value_t = 20)]
    pub max_lag: usize,
    #[arg(long, default_value_t = 0)]
    pub n_perm: usize,
    #[arg(long, default_value_t = 0.98)]
    pub confidence: f64,
    #[command(flatten)]
    pub common: Common,
}

pub(crate) fn run_crossgram(a: &CrossgramArgs) -> CliResult<()> {
    let all = read_matrix(&a.input)?;
    let x = pick(&all, a.x_col, &a.input)?;
    let y = pick(&all, a.y_col, &a.input)?;
    let ty_set = a.tail_y.clone().unwrap_or_else(|| a.tail.clone());
    let tx = threshold(a.q, None, &a.tail);
    let ty = threshold(a.q, None, &ty_set);
    let mut curve = cross_extremogram(&x, &y, &a.tail, &ty_set, &tx, &ty, a.max_lag)?;
    if a.n_perm > 0 {
        let rng = derive_stream(a.common.seed, CROSS_BAND_STREAM);
        curve.band =
            Some(cross_permutation_band(&x, &y, &a.tail, &ty_set, &tx, &ty, a.max_lag, a.n_perm, a.confidence, &rng)?);
    }
    write_extremogram(a.common.output.as_deref(), &curve)
}

#[derive(Args, Debug, Clone)]
pub struct IndexArgs {
    #[command(flatten)]
    pub input: Input,
    /// Block size.
    #[arg(long, default_value_t = 24)]
    pub s: usize,
    #[arg(long, default_value_t = 0.98)]
    pub q: f64,
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long, default_value = "upper:1", value_parser = parse::tail)]
    pub tail: TailSet,
    #[command(flatten)]
    pub common: Common,
}

pub(crate) fn run_index(a: &IndexArgs) -> CliResult<()> {
    let x = a.input.read()?;
    let est = blocks_extremal_index(&x, a.s, &a.tail, &threshold(a.q, a.threshold, &a.tail))?;
    let row = vec![num(est.theta), est.blocks.to_string(), est.exceedances.to_string(), num(est.threshold_used)];
    write_table(a.common.output.as_deref(), &["theta_hat", "K", "N", "threshold"], &[row])
}

#[derive(Args, Debug, Clone)]
pub struct GarchfitArgs {
    #[command(flatten)]
    pub input: Input,
    /// Also write `x, sigma, z` for the fitted model here.
    #[arg(long)]
    pub residuals: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

pub(crate) fn run_garchfit(a: &GarchfitArgs) -> CliResult<()> {
    let x = a.input.read()?;
    let fit = garch11_fit(&x, None)?;
    let row = vec![
        num(fit.alpha0),
        num(fit.alpha1),
        num(fit.beta1),
        num(fit.loglik),
        fit.converged.to_string(),
        fit.iterations.to_string(),
    ];
    write_table(
        a.common.output.as_deref(),
        &["alpha0", "alpha1", "beta1", "loglik", "converged", "iterations"],
        &[row],
    )?;
    if let Some(path) = &a.residuals {
        let sigma = garch_volatility(&x, &fit)?;
        let rows: Vec<Vec<String>> =
            x.column(0).iter().zip(&sigma).map(|(x, s)| vec![num(*x), num(*s), num(x / s)]).collect();
        write_table(Some(path), &["x", "sigma", "z"], &rows)?;
    }
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct SpectralArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, default_value = "upper:1", value_parser = parse::tail)]
    pub tail: TailSet,
    #[arg(long, default_value_t = 0.96)]
    pub q: f64,
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Daniell half-width; defaults to `min(⌊√n/2⌋, 52)`.
    #[arg(long)]
    pub s: Option<usize>,
    /// Permutations for the simultaneous band; 0 for none.
    #[arg(long, default_value_t = 0)]
    pub n_perm: usize,
    #[arg(long, default_value_t = 0.95)]
    pub confidence: f64,
    /// Oracle column for a linear process: coefficients of the filter.
    #[arg(long, value_parser = psi_parser)]
    pub oracle_psi: Option<Psi>,
    #[arg(long, default_value_t = 1.0)]
    pub oracle_alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub oracle_p: f64,
    #[command(flatten)]
    pub common: Common,
}

pub(crate) fn spectral_curve(
    x: &SeriesMatrix,
    tail: &TailSet,
    th: &ThresholdSpec,
    s: Option<usize>,
    n_perm: usize,
    confidence: f64,
    seed: u64,
) -> CliResult<SpectralCurve> {
    let window = Window::Daniell { s: s.unwrap_or_else(|| default_half_width(x.len())) };
    let raw = extremal_periodogram(x, tail, th)?;
    let p = raw.tail_estimate();
    let mut curve = smoothed_periodogram(standardize_periodogram(raw, p)?, &window)?;
    if n_perm > 0 {
        let rng = derive_stream(seed, SPECTRAL_BAND_STREAM);
        curve.band = Some(spectral_band(x, tail, th, &window, n_perm, confidence, &rng)?);
    }
    Ok(curve)
}

pub(crate) fn write_spectral(path: Option<&std::path::Path>, c: &SpectralCurve) -> CliResult<()> {
    let std = c.standardized.as_ref();
    let sm = c.smoothed.as_ref();
    let rows: Vec<Vec<String>> = (0..c.frequencies.len())
        .map(|j| {
            vec![
                num(c.frequencies[j]),
                num(c.raw[j]),
                opt(std.map(|v| v[j])),
                opt(sm.map(|v| v[j])),
                opt(c.band.map(|b| b.0)),
                opt(c.band.map(|b| b.1)),
                opt(c.oracle.as_ref().map(|o| o[j])),
            ]
        })
        .collect();
    write_table(path, &["frequency", "raw", "standardized", "smoothed", "band_lo", "band_hi", "oracle"], &rows)
}

fn linear_spectral(psi: &[f64], alpha: f64, p: f64, lambda: f64) -> extremo::Result<f64> {
    let trunc = psi.len() + 10;
    let rho: Vec<f64> =
        (0..=trunc).map(|h| rho_linear(psi, alpha, p, h).map(|v| v.value)).collect::<extremo::Result<_>>()?;
    spectral_density_oracle(|h| rho[h], lambda, trunc)
}

pub(crate) fn run_spectral(a: &SpectralArgs) -> CliResult<()> {
    let x = a.input.read()?;
    let th = threshold(a.q, a.threshold, &a.tail);
    let mut curve = spectral_curve(&x, &a.tail, &th, a.s, a.n_perm, a.confidence, a.common.seed)?;
    if let Some(psi) = &a.oracle_psi {
        curve.oracle = Some(
            curve
                .frequencies
                .iter()
                .map(|&l| linear_spectral(&psi.0, a.oracle_alpha, a.oracle_p, l))
                .collect::<extremo::Result<_>>()?,
        );
    }
    write_spectral(a.common.output.as_deref(), &curve)
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// Extremogram of a linear process.
    Linear,
    /// Spectral density of the extremal events of a linear process.
    LinearSpectral,
    /// Extremogram of the max-moving process.
    MaxMoving,
    /// Finite-level extremogram of the max-moving process.
    PreExtremogram,
    /// Extremal index of the max-moving process.
    MaxMovingIndex,
    /// Tail index of a stochastic recurrence.
    Kesten,
    /// Extremogram of a stochastic recurrence (Monte Carlo).
    Sre,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub kind: OracleKind,
    #[arg(long, value_parser = psi_parser)]
    pub psi: Option<Psi>,
    /// Tail index; for `sre` it is solved from `--a-noise` when absent.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Weight of the upper tail of the noise.
    #[arg(long, default_value_t = 1.0)]
    pub p: f64,
    #[arg(long, default_value = "normal:1", value_parser = parse::density)]
    pub density: DensitySpec,
    /// Cut of the conditioning set `(a, ∞)`.
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
    /// Cut of the target set `(b, ∞)`.
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    /// Level `m` of the finite-level extremogram.
    #[arg(long, default_value_t = 100.0)]
    pub m: f64,
    #[arg(long, value_parser = parse::noise)]
    pub a_noise: Option<NoiseSpec>,
    #[arg(long, default_value_t = 10)]
    pub max_lag: usize,
    /// Grid points on `[0, π]` for spectral oracles.
    #[arg(long, default_value_t = 100)]
    pub n_freq: usize,
    #[arg(long, default_value_t = 512)]
    pub n_limit: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub n_mc: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub abs_tol: f64,
    #[command(flatten)]
    pub common: Common,
}

fn oracle_cells(v: &OracleValue) -> [String; 3] {
    [num(v.value), v.method.name().to_string(), num(v.method.error())]
}

pub(crate) fn run_oracle(a: &OracleArgs) -> CliResult<()> {
    let out = a.common.output.as_deref();
    let alpha = || require(a.alpha, "alpha", "this oracle");
    let psi = || a.psi.clone().map(|p| p.0).ok_or_else(|| config("--psi is required for this oracle"));
    let a_noise = || require(a.a_noise, "a-noise", "this oracle");
    let mut rng = derive_stream(a.common.seed, ORACLE_STREAM);
    let by_lag = |f: &dyn Fn(usize) -> extremo::Result<OracleValue>| -> CliResult<Vec<Vec<String>>> {
        (0..=a.max_lag)
            .map(|h| {
                let v = f(h)?;
                let mut row = vec![h.to_string()];
                row.extend(oracle_cells(&v));
                Ok(row)
            })
            .collect()
    };
    let lag_header = ["lag", "value", "method", "error"];
    match a.kind {
        OracleKind::Linear => {
            let (psi, alpha) = (psi()?, alpha()?);
            write_table(out, &lag_header, &by_lag(&|h| rho_linear(&psi, alpha, a.p, h))?)
        }
        OracleKind::LinearSpectral => {
            let (psi, alpha) = (psi()?, alpha()?);
            if a.n_freq == 0 {
                return Err(config("--n-freq must be positive"));
            }
            let rows = (0..=a.n_freq)
                .map(|k| {
                    let l = PI * k as f64 / a.n_freq as f64;
                    Ok(vec![num(l), num(linear_spectral(&psi, alpha, a.p, l)?), "closed_form".into(), num(0.0)])
                })
                .collect::<CliResult<Vec<_>>>()?;
            write_table(out, &["frequency", "value", "method", "error"], &rows)
        }
        OracleKind::MaxMoving => {
            let alpha = alpha()?;
            write_table(out, &lag_header, &by_lag(&|h| maxmoving_extremogram(&a.density, alpha, a.a, a.b, h, a.abs_tol))?)
        }
        OracleKind::PreExtremogram => {
            let alpha = alpha()?;
            write_table(out, &lag_header, &by_lag(&|h| maxmoving_pre_extremogram(&a.density, alpha, a.m, h))?)
        }
        OracleKind::MaxMovingIndex => {
            let v = maxmoving_extremal_index(&a.density, alpha()?, a.n_limit, a.abs_tol)?;
            write_table(out, &["value", "method", "error"], &[oracle_cells(&v).to_vec()])
        }
        OracleKind::Kesten => {
            let v = kesten_alpha(&a_noise()?, a.n_mc, (0.1, 10.0), 1e-10, &mut rng)?;
            write_table(out, &["value", "method", "error"], &[oracle_cells(&v).to_vec()])
        }
        OracleKind::Sre => {
            let law = a_noise()?;
            let alpha = match a.alpha {
                Some(v) => v,
                None => kesten_alpha(&law, a.n_mc, (0.1, 10.0), 1e-10, &mut rng)?.value,
            };
            let rows: Vec<Vec<String>> = (1..=a.max_lag)
                .map(|h| {
                    let v = rho_sre_mc(&law, alpha, h, a.n_mc, &mut rng.substream(h as u64))?;
                    let mut row = vec![h.to_string()];
                    row.extend(oracle_cells(&v));
                    Ok(row)
                })
                .collect::<CliResult<_>>()?;
            write_table(out, &lag_header, &rows)
        }
    }
}
