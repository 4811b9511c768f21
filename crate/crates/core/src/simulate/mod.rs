//! Simulators for the model classes covered by the oracles.

mod maxstable;
mod models;
mod noise;

pub use maxstable::{
    cholesky_psd, sim_brown_resnick, sim_max_moving, MaxStableOptions, Variogram, DEFAULT_POINT_BUDGET,
    DEFAULT_TRUNC_EPS,
};
pub use models::{
    ar1_recursion, garch11_recursion, geometric_psi, linear_filter, sim_ar1, sim_garch11, sim_linear, sim_sre,
    sim_sv, sre_recursion, sv_recursion, Garch11Params, DEFAULT_BURN_IN,
};
pub use noise::{Noise, NoiseSpec};

use crate::density::DensitySpec;
use crate::error::Result;
use crate::rng::RngStream;
use crate::series::SeriesMatrix;

#[derive(Debug, Clone, PartialEq)]
pub enum ModelSpec {
    Ar1 { phi: f64, noise: NoiseSpec },
    Linear { psi: Vec<f64>, noise: NoiseSpec, truncation: usize },
    Sre { a: NoiseSpec, b: NoiseSpec },
    Garch11 { params: Garch11Params, noise: NoiseSpec },
    Sv { vol_phi: f64, vol_sigma: f64, noise: NoiseSpec },
    MaxMoving { density: DensitySpec, alpha: f64 },
    BrownResnick { variogram: Variogram, alpha: f64 },
}

/// Output of [`simulate`]; GARCH also returns its volatility path.
#[derive(Debug, Clone, PartialEq)]
pub struct Simulated {
    pub series: SeriesMatrix,
    pub sigma: Option<SeriesMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimOptions {
    pub burn_in: usize,
    pub max_stable: MaxStableOptions,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self { burn_in: DEFAULT_BURN_IN, max_stable: MaxStableOptions::default() }
    }
}

pub fn simulate(model: &ModelSpec, n: usize, opts: &SimOptions, rng: &mut RngStream) -> Result<Simulated> {
    let plain = |series| Ok(Simulated { series, sigma: None });
    match model {
        ModelSpec::Ar1 { phi, noise } => plain(sim_ar1(*phi, noise, n, opts.burn_in, rng)?),
        ModelSpec::Linear { psi, noise, truncation } => plain(sim_linear(psi, noise, *truncation, n, rng)?),
        ModelSpec::Sre { a, b } => plain(sim_sre(a, b, n, opts.burn_in, rng)?),
        ModelSpec::Garch11 { params, noise } => {
            let (series, sigma) = sim_garch11(params, noise, n, opts.burn_in, rng)?;
            Ok(Simulated { series, sigma: Some(sigma) })
        }
        ModelSpec::Sv { vol_phi, vol_sigma, noise } => plain(sim_sv(*vol_phi, *vol_sigma, noise, n, rng)?),
        ModelSpec::MaxMoving { density, alpha } => plain(sim_max_moving(density, *alpha, n, &opts.max_stable, rng)?),
        ModelSpec::BrownResnick { variogram, alpha } => {
            plain(sim_brown_resnick(variogram, *alpha, n, &opts.max_stable, rng)?)
        }
    }
}
