//! Gaussian quasi-maximum likelihood for GARCH(1,1) and volatility filtering.

use crate::error::{invalid, Error, Result};
use crate::series::SeriesMatrix;
use crate::simulate::Garch11Params;

use super::optimize::nelder_mead;

const MAX_ITER: usize = 5000;
const TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GarchFit {
    pub alpha0: f64,
    pub alpha1: f64,
    pub beta1: f64,
    /// Gaussian quasi log-likelihood of the de-meaned data.
    pub loglik: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl GarchFit {
    pub fn params(&self) -> Garch11Params {
        Garch11Params { alpha0: self.alpha0, alpha1: self.alpha1, beta1: self.beta1 }
    }
}

/// `(log ω, log(α1/γ), log(β1/γ))` with `γ = 1 − α1 − β1`, so every real
/// vector maps to `ω > 0`, `α1, β1 > 0`, `α1 + β1 < 1`.
fn unpack(theta: &[f64]) -> (f64, f64, f64) {
    let (e1, e2) = (theta[1].exp(), theta[2].exp());
    let d = 1.0 + e1 + e2;
    (theta[0].exp(), e1 / d, e2 / d)
}

fn pack(omega: f64, a: f64, b: f64) -> [f64; 3] {
    let g = 1.0 - a - b;
    [omega.ln(), (a / g).ln(), (b / g).ln()]
}

/// Mean of `(ln σ²_t + y²_t / σ²_t) / 2` with `σ²_1 = ω + (α1 + β1) v`.
fn half_nll(y: &[f64], v: f64, omega: f64, a: f64, b: f64) -> f64 {
    let mut s2 = omega + (a + b) * v;
    let mut acc = 0.0;
    for &x in y {
        acc += s2.ln() + x * x / s2;
        s2 = omega + a * x * x + b * s2;
    }
    0.5 * acc / y.len() as f64
}

fn univariate(series: &SeriesMatrix) -> Result<&[f64]> {
    if series.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, got: series.dim() });
    }
    Ok(series.as_slice())
}

fn mean_and_variance(x: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    (mean, x.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n)
}

/// Fit `σ²_t = α0 + α1 X²_{t−1} + β1 σ²_{t−1}` by Gaussian QMLE.
///
/// The data are de-meaned and scaled to unit variance; the simplex search
/// runs from `init` (if given) and three fixed starting points, and the best
/// optimum is rescaled. The recursion starts at
/// `σ²_1 = α0 + (α1 + β1) s²` with `s²` the sample variance, its
/// conditional-expectation backcast.
pub fn garch11_fit(series: &SeriesMatrix, init: Option<Garch11Params>) -> Result<GarchFit> {
    let x = univariate(series)?;
    let n = x.len();
    if n < 2 {
        return Err(invalid("series", "need at least two observations"));
    }
    if n < 500 {
        log::warn!("GARCH fit on only {n} observations; estimates will be noisy");
    }
    let (mean, var) = mean_and_variance(x);
    if !(var > 0.0) {
        return Err(Error::ZeroVariance);
    }
    let scale = var.sqrt();
    let z: Vec<f64> = x.iter().map(|v| (v - mean) / scale).collect();
    let objective = |theta: &[f64]| {
        let (omega, a, b) = unpack(theta);
        half_nll(&z, 1.0, omega, a, b)
    };

    let mut starts: Vec<[f64; 3]> = Vec::new();
    if let Some(p) = init {
        p.validate()?;
        let (a, b) = (p.alpha1.max(1e-4), p.beta1.max(1e-4));
        if a + b < 1.0 {
            starts.push(pack(p.alpha0 / var, a, b));
        }
    }
    for (a, b) in [(0.05, 0.90), (0.10, 0.70), (0.20, 0.30)] {
        starts.push(pack(1.0 - a - b, a, b));
    }

    let mut best: Option<super::optimize::Minimum> = None;
    let mut total_iter = 0;
    for s in &starts {
        let m = nelder_mead(objective, s, 0.5, TOL, MAX_ITER);
        total_iter += m.iterations;
        if best.as_ref().is_none_or(|b| m.value < b.value) {
            best = Some(m);
        }
    }
    let best = best.expect("at least one start");
    if !best.converged {
        log::warn!("GARCH simplex search hit {MAX_ITER} iterations without converging");
    }
    let (omega, a, b) = unpack(&best.x);
    let nf = n as f64;
    let loglik = -0.5 * nf * ((2.0 * std::f64::consts::PI).ln() + var.ln()) - nf * best.value;
    Ok(GarchFit {
        alpha0: omega * var,
        alpha1: a,
        beta1: b,
        loglik,
        converged: best.converged,
        iterations: total_iter,
    })
}

/// Fitted volatilities `σ̂_t` from the recursion on the observed series,
/// started like the fit.
pub fn garch_volatility(series: &SeriesMatrix, fit: &GarchFit) -> Result<Vec<f64>> {
    let x = univariate(series)?;
    fit.params().validate()?;
    let (_, var) = mean_and_variance(x);
    let mut s2 = fit.alpha0 + (fit.alpha1 + fit.beta1) * var;
    let mut out = Vec::with_capacity(x.len());
    for &v in x {
        if !(s2 > 0.0) {
            return Err(invalid("volatility", "fitted variance reached zero"));
        }
        out.push(s2.sqrt());
        s2 = fit.alpha0 + fit.alpha1 * v * v + fit.beta1 * s2;
    }
    Ok(out)
}

/// Filtered sequence `Ẑ_t = X_t / σ̂_t`.
pub fn garch_filter(series: &SeriesMatrix, fit: &GarchFit) -> Result<SeriesMatrix> {
    let sigma = garch_volatility(series, fit)?;
    SeriesMatrix::from_column(series.as_slice().iter().zip(&sigma).map(|(x, s)| x / s).collect())
}
