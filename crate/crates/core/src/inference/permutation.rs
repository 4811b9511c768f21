use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::{band_from_sorted, check_confidence, ExtremogramConfig};
use crate::error::{invalid, Error, Result};
use crate::rng::RngStream;
use crate::series::SeriesMatrix;
use crate::tailset::{exceedance_indicators, TailSet};
use crate::threshold::ThresholdSpec;
use crate::timedomain::{cross_extremogram, lagged_counts};

/// Indicator pairs `(I{X_t ∈ a_m A}, I{X_t ∈ a_m B})` of the original series.
///
/// Quantile thresholds are invariant under permutation, so shuffling these
/// pairs is the same as shuffling the series and re-estimating.
fn indicator_pairs(series: &SeriesMatrix, config: &ExtremogramConfig) -> Result<(Vec<bool>, Vec<bool>)> {
    let u = config.threshold.resolve(series)?;
    let ia = exceedance_indicators(series, &config.a, u)?;
    let ib = exceedance_indicators(series, &config.b, u)?;
    if !ia.iter().any(|&v| v) {
        return Err(Error::ZeroDenominator);
    }
    Ok((ia, ib))
}

/// Per-permutation extremogram values for lags `0..=max_lag`; permutation
/// `k` draws from substream `k` of `rng`.
fn permuted_curves(ia: &[bool], ib: &[bool], max_lag: usize, n_perm: usize, rng: &RngStream) -> Vec<Vec<f64>> {
    (0..n_perm)
        .into_par_iter()
        .map(|k| {
            let mut order: Vec<usize> = (0..ia.len()).collect();
            order.shuffle(&mut rng.substream(k as u64));
            let pa: Vec<bool> = order.iter().map(|&i| ia[i]).collect();
            let pb: Vec<bool> = order.iter().map(|&i| ib[i]).collect();
            let (num, den) = lagged_counts(&pa, &pb, max_lag);
            num.iter().map(|&c| c as f64 / den as f64).collect()
        })
        .collect()
}

/// Band for the lag-1 extremogram under the iid null: the statistic is
/// recomputed on `n_perm` uniform random permutations of the series.
/// With 99 permutations and confidence 0.98 the band is their (min, max).
pub fn permutation_band_lag1(
    series: &SeriesMatrix,
    config: &ExtremogramConfig,
    n_perm: usize,
    confidence: f64,
    rng: &RngStream,
) -> Result<(f64, f64)> {
    if n_perm == 0 {
        return Err(invalid("n_perm", "need at least one permutation"));
    }
    check_confidence(confidence)?;
    if series.len() < 2 {
        return Err(invalid("series", "lag 1 needs at least two observations"));
    }
    let (ia, ib) = indicator_pairs(series, config)?;
    let mut stats: Vec<f64> = permuted_curves(&ia, &ib, 1, n_perm, rng).into_iter().map(|c| c[1]).collect();
    stats.sort_by(f64::total_cmp);
    Ok(band_from_sorted(&stats, confidence))
}

/// Pointwise permutation bands for lags `0..=max_lag`.
pub fn permutation_band_per_lag(
    series: &SeriesMatrix,
    config: &ExtremogramConfig,
    n_perm: usize,
    confidence: f64,
    rng: &RngStream,
) -> Result<Vec<(f64, f64)>> {
    if n_perm == 0 {
        return Err(invalid("n_perm", "need at least one permutation"));
    }
    check_confidence(confidence)?;
    if config.max_lag >= series.len() {
        return Err(invalid("max_lag", "must be below the series length"));
    }
    let (ia, ib) = indicator_pairs(series, config)?;
    let curves = permuted_curves(&ia, &ib, config.max_lag, n_perm, rng);
    Ok((0..=config.max_lag)
        .map(|h| {
            let mut col: Vec<f64> = curves.iter().map(|c| c[h]).collect();
            col.sort_by(f64::total_cmp);
            band_from_sorted(&col, confidence)
        })
        .collect())
}

/// Simultaneous band over lags `1..=max_lag`: the confidence quantiles of
/// the per-permutation minimum and maximum of `ρ̂(1..=max_lag)`.
pub fn permutation_band_simultaneous(
    series: &SeriesMatrix,
    config: &ExtremogramConfig,
    n_perm: usize,
    confidence: f64,
    rng: &RngStream,
) -> Result<(f64, f64)> {
    if n_perm == 0 {
        return Err(invalid("n_perm", "need at least one permutation"));
    }
    check_confidence(confidence)?;
    if config.max_lag == 0 || config.max_lag >= series.len() {
        return Err(invalid("max_lag", "must lie in 1..n"));
    }
    let (ia, ib) = indicator_pairs(series, config)?;
    let curves = permuted_curves(&ia, &ib, config.max_lag, n_perm, rng);
    let mut lows: Vec<f64> = curves.iter().map(|c| c[1..].iter().copied().fold(f64::INFINITY, f64::min)).collect();
    let mut highs: Vec<f64> = curves.iter().map(|c| c[1..].iter().copied().fold(f64::NEG_INFINITY, f64::max)).collect();
    lows.sort_by(f64::total_cmp);
    highs.sort_by(f64::total_cmp);
    Ok((band_from_sorted(&lows, confidence).0, band_from_sorted(&highs, confidence).1))
}

/// Pointwise bands for the cross-extremogram at lags `−max_lag..=max_lag`
/// under independence of `x` and `y`: `y` is permuted while `x` is held
/// fixed, and thresholds stay at their values on the original data.
#[allow(clippy::too_many_arguments)]
pub fn cross_permutation_band(
    x: &SeriesMatrix,
    y: &SeriesMatrix,
    a: &TailSet,
    b: &TailSet,
    threshold_x: &ThresholdSpec,
    threshold_y: &ThresholdSpec,
    max_lag: usize,
    n_perm: usize,
    confidence: f64,
    rng: &RngStream,
) -> Result<Vec<(f64, f64)>> {
    if n_perm == 0 {
        return Err(invalid("n_perm", "need at least one permutation"));
    }
    check_confidence(confidence)?;
    let observed = cross_extremogram(x, y, a, b, threshold_x, threshold_y, max_lag)?;
    let ux = ThresholdSpec::Absolute(observed.threshold_used);
    let uy = ThresholdSpec::Absolute(observed.threshold_other.expect("cross curve records both levels"));
    let curves: Vec<Vec<f64>> = (0..n_perm)
        .into_par_iter()
        .map(|k| {
            let mut order: Vec<usize> = (0..y.len()).collect();
            order.shuffle(&mut rng.substream(k as u64));
            let yp = y.select_rows(&order);
            cross_extremogram(x, &yp, a, b, &ux, &uy, max_lag).map(|c| c.estimates)
        })
        .collect::<Result<_>>()?;
    Ok((0..observed.lags.len())
        .map(|i| {
            let mut col: Vec<f64> = curves.iter().map(|c| c[i]).collect();
            col.sort_by(f64::total_cmp);
            band_from_sorted(&col, confidence)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::derive_stream;

    fn config(u: f64) -> ExtremogramConfig {
        let up = TailSet::upper(1.0).unwrap();
        ExtremogramConfig { a: up.clone(), b: up, threshold: ThresholdSpec::Absolute(u), max_lag: 3 }
    }

    #[test]
    fn all_exceed_gives_degenerate_band() {
        let s = SeriesMatrix::from_column(vec![5.0; 50]).unwrap();
        let band = permutation_band_lag1(&s, &config(1.0), 99, 0.98, &derive_stream(1, 0)).unwrap();
        assert_eq!(band, (49.0 / 50.0, 49.0 / 50.0));
    }

    #[test]
    fn deterministic_under_threads() {
        let x: Vec<f64> = (0..500).map(|i| ((i * 7919) % 503) as f64).collect();
        let s = SeriesMatrix::from_column(x).unwrap();
        let c = config(450.0);
        let a = permutation_band_per_lag(&s, &c, 99, 0.9, &derive_stream(3, 0)).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| permutation_band_per_lag(&s, &c, 99, 0.9, &derive_stream(3, 0)).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn cross_band_covers_lag_range() {
        let x: Vec<f64> = (0..400).map(|i| ((i * 7919) % 401) as f64).collect();
        let y: Vec<f64> = (0..400).map(|i| ((i * 104_729) % 397) as f64).collect();
        let (x, y) = (SeriesMatrix::from_column(x).unwrap(), SeriesMatrix::from_column(y).unwrap());
        let up = TailSet::upper(1.0).unwrap();
        let th = ThresholdSpec::quantile(0.9, crate::threshold::Functional::Upper);
        let band = cross_permutation_band(&x, &y, &up, &up, &th, &th, 3, 49, 0.96, &derive_stream(2, 0)).unwrap();
        assert_eq!(band.len(), 7);
        assert!(band.iter().all(|(lo, hi)| lo <= hi));
    }
}
