use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::periodogram::periodogram_from_indicators;
use super::smoothing::{smooth_values, Window};
use crate::error::{invalid, Error, Result};
use crate::inference::sorted_quantile;
use crate::rng::RngStream;
use crate::series::SeriesMatrix;
use crate::tailset::{exceedance_indicators, TailSet};
use crate::threshold::ThresholdSpec;

/// Simultaneous band for the smoothed periodogram under the iid null.
///
/// Each of `n_perm` random permutations of the exceedance indicators
/// (permutation `k` drawn from substream `k`) yields a smoothed periodogram;
/// the band is the `(1 − c)/2` quantile of the per-permutation minima over
/// the Fourier grid and the `(1 + c)/2` quantile of the maxima.
pub fn spectral_band(
    series: &SeriesMatrix,
    set: &TailSet,
    threshold: &ThresholdSpec,
    window: &Window,
    n_perm: usize,
    confidence: f64,
    rng: &RngStream,
) -> Result<(f64, f64)> {
    if n_perm == 0 {
        return Err(invalid("n_perm", "need at least one permutation"));
    }
    if !(confidence > 0.0 && confidence <= 1.0) {
        return Err(invalid("confidence", format!("must lie in (0, 1], got {confidence}")));
    }
    if n_perm < 100 {
        log::warn!("simultaneous spectral band from only {n_perm} permutations");
    }
    let n = series.len();
    if n < 3 {
        return Err(invalid("series", "no Fourier frequencies in (0, π)"));
    }
    let weights = window.weights()?;
    let u = threshold.resolve(series)?;
    let m = threshold.scaling_m(series, u)?;
    let ind = exceedance_indicators(series, set, u)?;
    if weights.len() > (n - 1) / 2 {
        return Err(invalid("window", "window wider than the frequency grid"));
    }
    let extremes: Vec<Result<(f64, f64)>> = (0..n_perm)
        .into_par_iter()
        .map(|k| {
            let mut perm = ind.clone();
            perm.shuffle(&mut rng.substream(k as u64));
            let sm = smooth_values(&periodogram_from_indicators(&perm, m), &weights)?;
            let lo = sm.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = sm.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            Ok((lo, hi))
        })
        .collect();
    let mut mins = Vec::with_capacity(n_perm);
    let mut maxs = Vec::with_capacity(n_perm);
    for e in extremes {
        let (lo, hi) = e?;
        mins.push(lo);
        maxs.push(hi);
    }
    mins.sort_by(f64::total_cmp);
    maxs.sort_by(f64::total_cmp);
    let lo = sorted_quantile(&mins, 0.5 * (1.0 - confidence));
    let hi = sorted_quantile(&maxs, 0.5 * (1.0 + confidence));
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(Error::ZeroDenominator);
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::derive_stream;

    #[test]
    fn single_permutation_gives_its_range() {
        let x: Vec<f64> = (0..101).map(|i| ((i * 37) % 101) as f64).collect();
        let s = SeriesMatrix::from_column(x).unwrap();
        let up = TailSet::upper(1.0).unwrap();
        let t = ThresholdSpec::Absolute(90.0);
        let w = Window::Daniell { s: 2 };
        let rng = derive_stream(8, 0);
        let (lo, hi) = spectral_band(&s, &up, &t, &w, 1, 0.95, &rng).unwrap();
        // rebuild the one permutation by hand
        let u = t.resolve(&s).unwrap();
        let mut ind = exceedance_indicators(&s, &up, u).unwrap();
        ind.shuffle(&mut rng.substream(0));
        let m = t.scaling_m(&s, u).unwrap();
        let sm = smooth_values(&periodogram_from_indicators(&ind, m), &w.weights().unwrap()).unwrap();
        assert_eq!(lo, sm.iter().copied().fold(f64::INFINITY, f64::min));
        assert_eq!(hi, sm.iter().copied().fold(f64::NEG_INFINITY, f64::max));
    }
}
