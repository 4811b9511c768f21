//! Recursive time series models driven by iid innovations.
//!
//! Each model has a `*_recursion` kernel that takes its innovations from a
//! closure, so hand-computable sequences can be injected, and a `sim_*`
//! wrapper that draws them from an [`RngStream`].

use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::noise::NoiseSpec;
use crate::error::{invalid, Error, Result};
use crate::rng::RngStream;
use crate::series::SeriesMatrix;

/// Number of recursion steps discarded before recording.
pub const DEFAULT_BURN_IN: usize = 1000;

/// Monte Carlo draws used by the log-moment stationarity checks.
const STATIONARITY_DRAWS: usize = 100_000;

/// Iterate `X_t = φ X_{t−1} + Z_t` from `x0`, discard `burn_in` steps and
/// return the next `n` values.
pub fn ar1_recursion(phi: f64, x0: f64, burn_in: usize, n: usize, mut z: impl FnMut() -> f64) -> Vec<f64> {
    let mut x = x0;
    let mut out = Vec::with_capacity(n);
    for t in 0..burn_in + n {
        x = phi * x + z();
        if t >= burn_in {
            out.push(x);
        }
    }
    out
}

pub fn sim_ar1(phi: f64, noise: &NoiseSpec, n: usize, burn_in: usize, rng: &mut RngStream) -> Result<SeriesMatrix> {
    if !(phi.abs() < 1.0) {
        return Err(invalid("phi", format!("AR(1) needs |phi| < 1, got {phi}")));
    }
    let z = noise.sampler()?;
    SeriesMatrix::from_column(ar1_recursion(phi, 0.0, burn_in, n, || z.sample(rng)))
}

/// `X_t = Σ_j ψ_j Z_{t−j}` over a noise panel; the output has
/// `noise.len() − psi.len() + 1` entries.
pub fn linear_filter(psi: &[f64], noise: &[f64]) -> Vec<f64> {
    let q = psi.len();
    if q == 0 || noise.len() < q {
        return Vec::new();
    }
    (q - 1..noise.len())
        .map(|t| psi.iter().enumerate().map(|(j, p)| p * noise[t - j]).sum())
        .collect()
}

/// Causal linear process truncated at lag `truncation`; coefficients beyond
/// `psi` are zero.
pub fn sim_linear(
    psi: &[f64],
    noise: &NoiseSpec,
    truncation: usize,
    n: usize,
    rng: &mut RngStream,
) -> Result<SeriesMatrix> {
    if psi.is_empty() {
        return Err(Error::EmptyInput("psi"));
    }
    if truncation < psi.len() {
        return Err(invalid(
            "truncation",
            format!("must be at least len(psi) = {}, got {truncation}", psi.len()),
        ));
    }
    let z = noise.sampler()?;
    let panel: Vec<f64> = (0..n + truncation).map(|_| z.sample(rng)).collect();
    let mut x = linear_filter(psi, &panel);
    x.drain(..x.len() - n);
    SeriesMatrix::from_column(x)
}

/// Geometric coefficients `ψ_j = φ^j`, `j < len`.
pub fn geometric_psi(phi: f64, len: usize) -> Vec<f64> {
    (0..len).map(|j| phi.powi(j as i32)).collect()
}

/// Monte Carlo estimate of `E log g(draw)`; `log 0 = −∞` counts as negative.
fn mean_log<R: Rng>(rng: &mut R, mut draw: impl FnMut(&mut R) -> f64) -> f64 {
    let mut s = 0.0;
    for _ in 0..STATIONARITY_DRAWS {
        s += draw(rng).ln();
    }
    s / STATIONARITY_DRAWS as f64
}

/// `X_t = A_t X_{t−1} + B_t` with `(A_t, B_t)` from the closure.
pub fn sre_recursion(x0: f64, burn_in: usize, n: usize, mut ab: impl FnMut() -> (f64, f64)) -> Vec<f64> {
    let mut x = x0;
    let mut out = Vec::with_capacity(n);
    for t in 0..burn_in + n {
        let (a, b) = ab();
        x = a * x + b;
        if t >= burn_in {
            out.push(x);
        }
    }
    out
}

pub fn sim_sre(a: &NoiseSpec, b: &NoiseSpec, n: usize, burn_in: usize, rng: &mut RngStream) -> Result<SeriesMatrix> {
    let a = a.sampler()?;
    let b = b.sampler()?;
    let ml = mean_log(rng, |r| a.sample(r).max(0.0));
    if !(ml < 0.0) {
        return Err(Error::NotStationary { mean_log: ml });
    }
    SeriesMatrix::from_column(sre_recursion(0.0, burn_in, n, || (a.sample(rng), b.sample(rng))))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Garch11Params {
    pub alpha0: f64,
    pub alpha1: f64,
    pub beta1: f64,
}

impl Garch11Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha0 > 0.0) {
            return Err(invalid("alpha0", format!("must be positive, got {}", self.alpha0)));
        }
        if !(self.alpha1 >= 0.0) {
            return Err(invalid("alpha1", format!("must be non-negative, got {}", self.alpha1)));
        }
        if !(self.beta1 >= 0.0) {
            return Err(invalid("beta1", format!("must be non-negative, got {}", self.beta1)));
        }
        Ok(())
    }

    /// Unconditional variance when it exists, else `alpha0`.
    pub fn start_variance(&self) -> f64 {
        let persistence = self.alpha1 + self.beta1;
        if persistence < 1.0 {
            self.alpha0 / (1.0 - persistence)
        } else {
            self.alpha0
        }
    }
}

/// `σ²_{t+1} = α0 + σ²_t (α1 Z_t² + β1)`, `X_t = σ_t Z_t`, starting from
/// `σ²_1 = sigma2_init`. Returns `(X, σ)` after the burn-in.
pub fn garch11_recursion(
    p: &Garch11Params,
    sigma2_init: f64,
    burn_in: usize,
    n: usize,
    mut z: impl FnMut() -> f64,
) -> (Vec<f64>, Vec<f64>) {
    let mut s2 = sigma2_init;
    let mut x = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(n);
    for t in 0..burn_in + n {
        let zt = z();
        if t >= burn_in {
            let s = s2.sqrt();
            x.push(s * zt);
            sigma.push(s);
        }
        s2 = p.alpha0 + s2 * (p.alpha1 * zt * zt + p.beta1);
    }
    (x, sigma)
}

pub fn sim_garch11(
    p: &Garch11Params,
    noise: &NoiseSpec,
    n: usize,
    burn_in: usize,
    rng: &mut RngStream,
) -> Result<(SeriesMatrix, SeriesMatrix)> {
    p.validate()?;
    let z = noise.sampler()?;
    let ml = mean_log(rng, |r| {
        let zt = z.sample(r);
        p.alpha1 * zt * zt + p.beta1
    });
    if !(ml < 0.0) {
        return Err(Error::NotStationary { mean_log: ml });
    }
    let (x, sigma) = garch11_recursion(p, p.start_variance(), burn_in, n, || z.sample(rng));
    Ok((SeriesMatrix::from_column(x)?, SeriesMatrix::from_column(sigma)?))
}

/// `X_t = σ_t Z_t` with `log σ_t = φ log σ_{t−1} + s η_t`; the closure yields
/// `(η_t, Z_t)`.
pub fn sv_recursion(
    vol_phi: f64,
    vol_sigma: f64,
    log_sigma0: f64,
    n: usize,
    mut eta_z: impl FnMut() -> (f64, f64),
) -> Vec<f64> {
    let mut h = log_sigma0;
    (0..n)
        .map(|_| {
            let (eta, z) = eta_z();
            h = vol_phi * h + vol_sigma * eta;
            h.exp() * z
        })
        .collect()
}

/// Stochastic volatility with a stationary Gaussian AR(1) log-volatility,
/// independent of the noise.
pub fn sim_sv(vol_phi: f64, vol_sigma: f64, noise: &NoiseSpec, n: usize, rng: &mut RngStream) -> Result<SeriesMatrix> {
    if !(vol_phi.abs() < 1.0) {
        return Err(invalid("vol_phi", format!("needs |vol_phi| < 1, got {vol_phi}")));
    }
    if !(vol_sigma >= 0.0 && vol_sigma.is_finite()) {
        return Err(invalid("vol_sigma", format!("must be non-negative, got {vol_sigma}")));
    }
    let z = noise.sampler()?;
    let std = Normal::new(0.0, 1.0).expect("unit normal");
    let stationary_sd = vol_sigma / (1.0 - vol_phi * vol_phi).sqrt();
    let h0 = stationary_sd * std.sample(rng);
    let x = sv_recursion(vol_phi, vol_sigma, h0, n, || (std.sample(rng), z.sample(rng)));
    SeriesMatrix::from_column(x)
}
