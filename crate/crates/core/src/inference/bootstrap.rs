use rand::Rng;
use rayon::prelude::*;

use super::{band_from_sorted, check_block_p, check_confidence, ExtremogramConfig};
use crate::error::{invalid, Error, Result};
use crate::rng::RngStream;
use crate::series::SeriesMatrix;

/// Index path of the circular stationary bootstrap: the start is uniform and
/// each later index either continues the block (`i + 1 mod n`) or, with
/// probability `p`, jumps to a fresh uniform index.
pub fn stationary_bootstrap_indices<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Vec<usize>> {
    check_block_p(p)?;
    if n == 0 {
        return Err(Error::EmptyInput("series"));
    }
    let mut idx = Vec::with_capacity(n);
    let mut i = rng.random_range(0..n);
    idx.push(i);
    for _ in 1..n {
        i = if rng.random::<f64>() < p { rng.random_range(0..n) } else { (i + 1) % n };
        idx.push(i);
    }
    Ok(idx)
}

pub fn stationary_bootstrap_resample<R: Rng + ?Sized>(series: &SeriesMatrix, p: f64, rng: &mut R) -> Result<SeriesMatrix> {
    let idx = stationary_bootstrap_indices(series.len(), p, rng)?;
    Ok(series.select_rows(&idx))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BootstrapBand {
    /// Percentile interval per lag `0..=max_lag`.
    pub bands: Vec<(f64, f64)>,
    pub replicates: usize,
    pub dropped: usize,
}

/// Percentile bands for the extremogram from `n_boot` stationary-bootstrap
/// replicates. Replicate `k` uses substream `k` of `rng`, and the threshold
/// is re-resolved on each replicate. Replicates whose estimate fails (no
/// exceedances) are dropped; more than 10% dropped is an error.
pub fn bootstrap_band(
    series: &SeriesMatrix,
    config: &ExtremogramConfig,
    n_boot: usize,
    p: f64,
    confidence: f64,
    rng: &RngStream,
) -> Result<BootstrapBand> {
    if n_boot == 0 {
        return Err(invalid("n_boot", "need at least one replicate"));
    }
    if n_boot < 50 {
        log::warn!("bootstrap band from only {n_boot} replicates");
    }
    check_confidence(confidence)?;
    check_block_p(p)?;
    let curves: Vec<Option<Vec<f64>>> = (0..n_boot)
        .into_par_iter()
        .map(|k| {
            let mut r = rng.substream(k as u64);
            let resampled = stationary_bootstrap_resample(series, p, &mut r).ok()?;
            config.estimate(&resampled).ok().map(|c| c.estimates)
        })
        .collect();
    let kept: Vec<Vec<f64>> = curves.into_iter().flatten().collect();
    let dropped = n_boot - kept.len();
    if kept.is_empty() || dropped * 10 > n_boot {
        return Err(Error::TooManyFailedReplicates { dropped, total: n_boot });
    }
    if dropped > 0 {
        log::warn!("{dropped} of {n_boot} bootstrap replicates had no exceedances and were dropped");
    }
    let bands = (0..=config.max_lag)
        .map(|h| {
            let mut col: Vec<f64> = kept.iter().map(|c| c[h]).collect();
            col.sort_by(f64::total_cmp);
            band_from_sorted(&col, confidence)
        })
        .collect();
    Ok(BootstrapBand { bands, replicates: kept.len(), dropped })
}
