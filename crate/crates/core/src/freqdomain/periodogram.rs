use std::f64::consts::PI;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{invalid, Error, Result};
use crate::series::SeriesMatrix;
use crate::tailset::{exceedance_indicators, TailSet};
use crate::threshold::ThresholdSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralCurve {
    /// Fourier frequencies `ω_j = 2πj/n`, `j = 1..=⌊(n−1)/2⌋`.
    pub frequencies: Vec<f64>,
    /// `I_nA(ω_j)`.
    pub raw: Vec<f64>,
    /// `I_nA / P̂_m(A)`.
    pub standardized: Option<Vec<f64>>,
    pub smoothed: Option<Vec<f64>>,
    pub window: Option<Vec<f64>>,
    /// Simultaneous band on the scale of `smoothed`.
    pub band: Option<(f64, f64)>,
    pub oracle: Option<Vec<f64>>,
    pub n: usize,
    pub m: f64,
    pub threshold_used: f64,
    /// Fraction of observations in `a_m A`.
    pub exceedance_fraction: f64,
}

impl SpectralCurve {
    /// `P̂_m(A) = (m/n) #{t : X_t ∈ a_m A}`.
    pub fn tail_estimate(&self) -> f64 {
        self.m * self.exceedance_fraction
    }
}

pub fn fourier_frequencies(n: usize) -> Vec<f64> {
    (1..=(n.saturating_sub(1)) / 2).map(|j| 2.0 * PI * j as f64 / n as f64).collect()
}

/// `(m/n) |Σ_t I_t e^{itω_j}|²` at every Fourier frequency in `(0, π)`.
/// Uncentered: at these frequencies a constant shift of `I_t` sums to zero.
pub fn periodogram_from_indicators(ind: &[bool], m: f64) -> Vec<f64> {
    let n = ind.len();
    let j_max = n.saturating_sub(1) / 2;
    if j_max == 0 {
        return Vec::new();
    }
    let fft = FftPlanner::<f64>::new().plan_fft_forward(n);
    let mut buf: Vec<Complex<f64>> = ind.iter().map(|&v| Complex::new(if v { 1.0 } else { 0.0 }, 0.0)).collect();
    fft.process(&mut buf);
    let scale = m / n as f64;
    buf[1..=j_max].iter().map(|c| scale * c.norm_sqr()).collect()
}

/// Direct evaluation at an arbitrary frequency; `centered` subtracts the
/// exceedance fraction first.
pub fn periodogram_at(ind: &[bool], m: f64, lambda: f64, centered: bool) -> f64 {
    let n = ind.len();
    let p0 = if centered { ind.iter().filter(|&&v| v).count() as f64 / n as f64 } else { 0.0 };
    let (mut re, mut im) = (0.0, 0.0);
    for (t, &v) in ind.iter().enumerate() {
        let x = if v { 1.0 } else { 0.0 } - p0;
        let arg = (t + 1) as f64 * lambda;
        re += x * arg.cos();
        im += x * arg.sin();
    }
    m / n as f64 * (re * re + im * im)
}

/// Extremal periodogram of the event `{X_t ∈ a_m A}`, with `a_m` from
/// `threshold` and `m = n(1 − q)` for quantile thresholds.
pub fn extremal_periodogram(series: &SeriesMatrix, set: &TailSet, threshold: &ThresholdSpec) -> Result<SpectralCurve> {
    let n = series.len();
    if n < 3 {
        return Err(invalid("series", format!("no Fourier frequencies in (0, π) for n = {n}")));
    }
    let u = threshold.resolve(series)?;
    let m = threshold.scaling_m(series, u)?;
    let ind = exceedance_indicators(series, set, u)?;
    let count = ind.iter().filter(|&&v| v).count();
    Ok(SpectralCurve {
        frequencies: fourier_frequencies(n),
        raw: periodogram_from_indicators(&ind, m),
        standardized: None,
        smoothed: None,
        window: None,
        band: None,
        oracle: None,
        n,
        m,
        threshold_used: u,
        exceedance_fraction: count as f64 / n as f64,
    })
}

/// Fill the standardized column `I_nA / P̂_m(A)`.
pub fn standardize_periodogram(mut curve: SpectralCurve, p_hat: f64) -> Result<SpectralCurve> {
    if !(p_hat > 0.0) {
        return Err(Error::ZeroDenominator);
    }
    curve.standardized = Some(curve.raw.iter().map(|v| v / p_hat).collect());
    Ok(curve)
}
