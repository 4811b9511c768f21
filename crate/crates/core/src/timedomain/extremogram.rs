//! Ratio estimators of the extremogram and cross-extremogram.

use crate::error::{invalid, Error, Result};
use crate::series::SeriesMatrix;
use crate::tailset::{exceedance_indicators, TailSet};
use crate::threshold::ThresholdSpec;

/// Sample (cross-)extremogram with its exact counts.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremogramCurve {
    pub lags: Vec<i64>,
    pub estimates: Vec<f64>,
    /// Resolved level for the conditioning series.
    pub threshold_used: f64,
    /// Resolved level for the second series of a cross-extremogram.
    pub threshold_other: Option<f64>,
    pub denominator: usize,
    pub numerators: Vec<usize>,
    pub band: Option<Vec<(f64, f64)>>,
    pub oracle: Option<Vec<f64>>,
}

impl ExtremogramCurve {
    fn from_counts(lags: Vec<i64>, numerators: Vec<usize>, denominator: usize, threshold_used: f64) -> Self {
        let estimates = numerators.iter().map(|&k| k as f64 / denominator as f64).collect();
        Self {
            lags,
            estimates,
            threshold_used,
            threshold_other: None,
            denominator,
            numerators,
            band: None,
            oracle: None,
        }
    }

    /// Estimate at `lag`, if present.
    pub fn at(&self, lag: i64) -> Option<f64> {
        self.lags.iter().position(|&l| l == lag).map(|i| self.estimates[i])
    }

    /// Fraction of lags in `lags` whose estimate lies inside the band.
    pub fn fraction_inside(&self, lags: impl Iterator<Item = i64>) -> Option<f64> {
        let band = self.band.as_ref()?;
        let (mut inside, mut total) = (0usize, 0usize);
        for lag in lags {
            if let Some(i) = self.lags.iter().position(|&l| l == lag) {
                total += 1;
                let (lo, hi) = band[i];
                if self.estimates[i] >= lo && self.estimates[i] <= hi {
                    inside += 1;
                }
            }
        }
        (total > 0).then(|| inside as f64 / total as f64)
    }
}

/// Counts `Σ_t I{a_t} I{b_{t+h}}` for `h = 0..=max_lag` (lag 0 over every
/// `t`, lag `h` over `t ≤ n − h`) and `Σ_t I{a_t}`.
pub fn lagged_counts(a: &[bool], b: &[bool], max_lag: usize) -> (Vec<usize>, usize) {
    let n = a.len().min(b.len());
    let mut num = vec![0usize; max_lag + 1];
    let mut den = 0;
    for t in 0..n {
        if !a[t] {
            continue;
        }
        den += 1;
        for (h, slot) in num.iter_mut().enumerate() {
            if t + h < n && b[t + h] {
                *slot += 1;
            }
        }
    }
    (num, den)
}

/// Lag-`h` ratio from indicator sequences; `None` when nothing exceeds.
pub fn ratio_at_lag(a: &[bool], b: &[bool], h: usize) -> Option<f64> {
    let den = a.iter().filter(|&&v| v).count();
    if den == 0 {
        return None;
    }
    let num = a.iter().zip(b.iter().skip(h)).filter(|(&x, &y)| x && y).count();
    Some(num as f64 / den as f64)
}

/// `ρ̂_AB(h) = Σ_{t≤n−h} I{X_t ∈ a_m A, X_{t+h} ∈ a_m B} / Σ_{t≤n} I{X_t ∈ a_m A}`.
pub fn sample_extremogram(
    series: &SeriesMatrix,
    a: &TailSet,
    b: &TailSet,
    threshold: &ThresholdSpec,
    max_lag: usize,
) -> Result<ExtremogramCurve> {
    if max_lag >= series.len() {
        return Err(invalid("max_lag", format!("must be below n = {}, got {max_lag}", series.len())));
    }
    let u = threshold.resolve(series)?;
    let ia = exceedance_indicators(series, a, u)?;
    let ib = exceedance_indicators(series, b, u)?;
    let (num, den) = lagged_counts(&ia, &ib, max_lag);
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(ExtremogramCurve::from_counts((0..=max_lag as i64).collect(), num, den, u))
}

/// Cross-extremogram of `y` given `x` for lags `−H..=H`, each series
/// thresholded at its own level:
/// `ρ̂(h) = Σ_t I{X_t ∈ a_X A, Y_{t+h} ∈ a_Y B} / Σ_t I{X_t ∈ a_X A}`.
///
/// Negative lags look back in `y` from the same conditioning events in `x`.
pub fn cross_extremogram(
    x: &SeriesMatrix,
    y: &SeriesMatrix,
    a: &TailSet,
    b: &TailSet,
    threshold_x: &ThresholdSpec,
    threshold_y: &ThresholdSpec,
    max_lag: usize,
) -> Result<ExtremogramCurve> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: y.len() });
    }
    if max_lag >= x.len() {
        return Err(invalid("max_lag", format!("must be below n = {}, got {max_lag}", x.len())));
    }
    let ux = threshold_x.resolve(x)?;
    let uy = threshold_y.resolve(y)?;
    let ia = exceedance_indicators(x, a, ux)?;
    let ib = exceedance_indicators(y, b, uy)?;
    let (forward, den) = lagged_counts(&ia, &ib, max_lag);
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    let n = ia.len();
    let backward: Vec<usize> = (1..=max_lag)
        .map(|h| (h..n).filter(|&t| ia[t] && ib[t - h]).count())
        .collect();
    let lags: Vec<i64> = (-(max_lag as i64)..=max_lag as i64).collect();
    let nums: Vec<usize> = backward.iter().rev().copied().chain(forward).collect();
    let mut curve = ExtremogramCurve::from_counts(lags, nums, den, ux);
    curve.threshold_other = Some(uy);
    Ok(curve)
}

/// `P̂_m(C) = (m/n) #{t : X_t ∈ a_m C}`.
pub fn tail_empirical(series: &SeriesMatrix, set: &TailSet, m: f64, a_m: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(invalid("m", format!("must be positive, got {m}")));
    }
    let ind = exceedance_indicators(series, set, a_m)?;
    let count = ind.iter().filter(|&&v| v).count();
    Ok(m / series.len() as f64 * count as f64)
}

/// Blocks estimate of the extremal index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlocksEstimate {
    pub theta: f64,
    /// Full blocks with at least one exceedance.
    pub blocks: usize,
    /// Total exceedances.
    pub exceedances: usize,
    pub threshold_used: f64,
}

/// `θ̂ = K_n / N_n` over the `⌊n/s⌋` full blocks of size `s`; a trailing
/// partial block is ignored for `K_n` and `N_n` counts every exceedance.
pub fn blocks_extremal_index(
    series: &SeriesMatrix,
    block_size: usize,
    set: &TailSet,
    threshold: &ThresholdSpec,
) -> Result<BlocksEstimate> {
    let n = series.len();
    if block_size == 0 || block_size > n {
        return Err(invalid("block_size", format!("must lie in 1..={n}, got {block_size}")));
    }
    let u = threshold.resolve(series)?;
    let ind = exceedance_indicators(series, set, u)?;
    blocks_from_indicators(&ind, block_size, u)
}

pub(crate) fn blocks_from_indicators(ind: &[bool], block_size: usize, u: f64) -> Result<BlocksEstimate> {
    let exceedances = ind.iter().filter(|&&v| v).count();
    if exceedances == 0 {
        return Err(Error::NoExceedances { threshold: u });
    }
    let blocks = ind.chunks_exact(block_size).filter(|c| c.iter().any(|&v| v)).count();
    Ok(BlocksEstimate { theta: blocks as f64 / exceedances as f64, blocks, exceedances, threshold_used: u })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threshold::Functional;

    fn col(v: &[f64]) -> SeriesMatrix {
        SeriesMatrix::from_column(v.to_vec()).unwrap()
    }

    #[test]
    fn alternating_series() {
        let s = col(&[2.0, 0.0, 2.0, 0.0, 2.0, 0.0]);
        let up = TailSet::upper(1.0).unwrap();
        let c = sample_extremogram(&s, &up, &up, &ThresholdSpec::Absolute(1.0), 2).unwrap();
        assert_eq!(c.denominator, 3);
        assert_eq!(c.numerators, vec![3, 0, 2]);
        assert_eq!(c.estimates, vec![1.0, 0.0, 2.0 / 3.0]);
    }

    #[test]
    fn cross_hand_count() {
        let x = col(&[2.0, 0.0, 0.0, 0.0]);
        let y = col(&[0.0, 2.0, 0.0, 0.0]);
        let up = TailSet::upper(1.0).unwrap();
        let t = ThresholdSpec::Absolute(1.0);
        let c = cross_extremogram(&x, &y, &up, &up, &t, &t, 2).unwrap();
        assert_eq!(c.lags, vec![-2, -1, 0, 1, 2]);
        assert_eq!(c.at(1), Some(1.0));
        assert_eq!(c.at(0), Some(0.0));
        assert_eq!(c.at(-1), Some(0.0));
        // reversed roles: y's exceedance at t = 2 sees x's at t = 1 one step back
        let r = cross_extremogram(&y, &x, &up, &up, &t, &t, 2).unwrap();
        assert_eq!(r.at(-1), Some(1.0));
    }

    #[test]
    fn zero_denominator() {
        let s = col(&[0.1, 0.2]);
        let up = TailSet::upper(1.0).unwrap();
        assert!(matches!(
            sample_extremogram(&s, &up, &up, &ThresholdSpec::Absolute(1.0), 1),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn tail_empirical_counts() {
        let s = col(&[3.0, 0.0, 5.0, 0.5]);
        let up = TailSet::upper(1.0).unwrap();
        assert_eq!(tail_empirical(&s, &up, 10.0, 1.0).unwrap(), 5.0);
        assert_eq!(tail_empirical(&s, &up, 10.0, 100.0).unwrap(), 0.0);
        let all = col(&[3.0, 5.0, 0.5]);
        assert_eq!(tail_empirical(&all, &up, 7.0, 0.1).unwrap(), 7.0);
    }

    #[test]
    fn blocks_hand_count() {
        let mut v = vec![0.0; 10];
        for t in [0, 1, 5] {
            v[t] = 2.0;
        }
        let up = TailSet::upper(1.0).unwrap();
        let e = blocks_extremal_index(&col(&v), 5, &up, &ThresholdSpec::Absolute(1.0)).unwrap();
        assert_eq!((e.blocks, e.exceedances), (2, 3));
        assert!((e.theta - 2.0 / 3.0).abs() < 1e-15);
        let all = blocks_extremal_index(&col(&[2.0; 10]), 5, &up, &ThresholdSpec::Absolute(1.0)).unwrap();
        assert_eq!(all.theta, 0.2);
        assert!(matches!(
            blocks_extremal_index(&col(&[0.0; 10]), 5, &up, &ThresholdSpec::Absolute(1.0)),
            Err(Error::NoExceedances { .. })
        ));
    }

    #[test]
    fn quantile_threshold_is_resolved() {
        let s = col(&[1.0, 5.0, 2.0, 4.0, 3.0]);
        let up = TailSet::upper(1.0).unwrap();
        let c = sample_extremogram(&s, &up, &up, &ThresholdSpec::quantile(0.6, Functional::Upper), 1).unwrap();
        assert_eq!(c.threshold_used, 3.0);
        assert_eq!(c.denominator, 3);
    }
}
