//! Permutation and stationary-bootstrap bands for extremogram statistics.

mod bootstrap;
mod permutation;

pub use bootstrap::{bootstrap_band, stationary_bootstrap_indices, stationary_bootstrap_resample, BootstrapBand};
pub use permutation::{
    cross_permutation_band, permutation_band_lag1, permutation_band_per_lag, permutation_band_simultaneous,
};

use crate::error::{invalid, Result};
use crate::series::SeriesMatrix;
use crate::tailset::TailSet;
use crate::threshold::ThresholdSpec;
use crate::timedomain::{sample_extremogram, ExtremogramCurve};

/// Default stationary-bootstrap jump probability (mean block length 20).
pub const DEFAULT_BLOCK_P: f64 = 0.05;

/// Which extremogram a band is built for.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremogramConfig {
    pub a: TailSet,
    pub b: TailSet,
    pub threshold: ThresholdSpec,
    pub max_lag: usize,
}

impl ExtremogramConfig {
    pub fn estimate(&self, series: &SeriesMatrix) -> Result<ExtremogramCurve> {
        sample_extremogram(series, &self.a, &self.b, &self.threshold, self.max_lag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BandMethod {
    Permutation { n_perm: usize },
    StationaryBootstrap { n_boot: usize, p: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandScope {
    PerLag,
    LagOneHorizontal,
    SimultaneousOverLags,
    SimultaneousOverFrequencies,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandSpec {
    pub method: BandMethod,
    pub confidence: f64,
    pub scope: BandScope,
}

impl BandSpec {
    pub fn validate(&self) -> Result<()> {
        check_confidence(self.confidence)?;
        match self.method {
            BandMethod::Permutation { n_perm: 0 } => Err(invalid("n_perm", "need at least one permutation")),
            BandMethod::StationaryBootstrap { n_boot: 0, .. } => {
                Err(invalid("n_boot", "need at least one replicate"))
            }
            BandMethod::StationaryBootstrap { p, .. } => check_block_p(p),
            _ => Ok(()),
        }
    }
}

pub(crate) fn check_confidence(c: f64) -> Result<()> {
    if c > 0.0 && c <= 1.0 {
        Ok(())
    } else {
        Err(invalid("confidence", format!("must lie in (0, 1], got {c}")))
    }
}

pub(crate) fn check_block_p(p: f64) -> Result<()> {
    if p > 0.0 && p <= 1.0 {
        Ok(())
    } else {
        Err(invalid("p", format!("must lie in (0, 1], got {p}")))
    }
}

/// Band from replicate statistics sorted ascending.
///
/// With `N` replicates the full range `(min, max)` is used once the
/// confidence reaches `(N − 1)/(N + 1)`, the level at which an original
/// statistic is outside by chance with probability `2/(N + 1)`; below that the
/// type-1 quantiles at `(1 ∓ c)/2` are returned.
pub fn band_from_sorted(sorted: &[f64], confidence: f64) -> (f64, f64) {
    let n = sorted.len();
    assert!(n > 0, "band needs at least one replicate");
    let full = (n as f64 - 1.0) / (n as f64 + 1.0);
    if confidence >= full - 1e-12 {
        return (sorted[0], sorted[n - 1]);
    }
    (
        sorted_quantile(sorted, 0.5 * (1.0 - confidence)),
        sorted_quantile(sorted, 0.5 * (1.0 + confidence)),
    )
}

/// Type-1 quantile of an ascending sample: the `⌈pN⌉`-th order statistic,
/// clamped to the sample.
pub fn sorted_quantile(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    let k = (p * n as f64 - 1e-9).ceil() as usize;
    sorted[k.clamp(1, n) - 1]
}
