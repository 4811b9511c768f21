//! Empirical quantiles and threshold resolution.

use crate::error::{invalid, Error, Result};
use crate::series::SeriesMatrix;

/// The `⌈q·n⌉`-th order statistic of `x` (type-1 quantile).
///
/// `q·n` is snapped to the nearest integer when it is within rounding error of
/// one, so `0.98 · 20000` selects the 19600th order statistic.
pub fn empirical_quantile(x: &[f64], q: f64) -> Result<f64> {
    if x.is_empty() {
        return Err(Error::EmptyInput("quantile sample"));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(invalid("q", format!("quantile level must lie in (0, 1), got {q}")));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return Err(invalid("x", "quantile sample contains non-finite values"));
    }
    let k = order_index(x.len(), q);
    let mut buf = x.to_vec();
    let (_, v, _) = buf.select_nth_unstable_by(k, f64::total_cmp);
    Ok(*v)
}

/// Zero-based index of the type-1 quantile in a sorted sample of size `n`.
pub(crate) fn order_index(n: usize, q: f64) -> usize {
    let nf = n as f64;
    let raw = q * nf;
    let snapped = if (raw - raw.round()).abs() <= 1e-12 * nf.max(1.0) {
        raw.round()
    } else {
        raw.ceil()
    };
    (snapped as usize).clamp(1, n) - 1
}

/// Scalar summary of an observation used to set a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functional {
    /// `|x|`, the Euclidean norm for multivariate rows.
    AbsValue,
    /// `x` (univariate only).
    Upper,
    /// `−x` (univariate only).
    Lower,
}

impl Functional {
    pub fn apply(&self, row: &[f64]) -> f64 {
        match self {
            Functional::AbsValue if row.len() == 1 => row[0].abs(),
            Functional::AbsValue => row.iter().map(|v| v * v).sum::<f64>().sqrt(),
            Functional::Upper => row[0],
            Functional::Lower => -row[0],
        }
    }

    pub fn values(&self, series: &SeriesMatrix) -> Result<Vec<f64>> {
        if series.dim() > 1 && *self != Functional::AbsValue {
            return Err(invalid(
                "functional",
                "upper/lower functionals need a univariate series; use per-coordinate thresholds",
            ));
        }
        Ok(series.rows().map(|r| self.apply(r)).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ThresholdSpec {
    Absolute(f64),
    Quantile { level: f64, functional: Functional },
}

impl ThresholdSpec {
    pub fn quantile(level: f64, functional: Functional) -> Self {
        ThresholdSpec::Quantile { level, functional }
    }

    /// The level `a_m > 0` for this series.
    pub fn resolve(&self, series: &SeriesMatrix) -> Result<f64> {
        let a = match *self {
            ThresholdSpec::Absolute(a) => a,
            ThresholdSpec::Quantile { level, functional } => {
                empirical_quantile(&functional.values(series)?, level)?
            }
        };
        if !(a > 0.0 && a.is_finite()) {
            return Err(invalid(
                "threshold",
                format!("resolved threshold must be positive, got {a}"),
            ));
        }
        Ok(a)
    }

    /// The scaling sequence value `m` paired with the threshold, so that
    /// `P(functional ≥ a_m) ≈ 1/m`. Quantile thresholds use `m = n(1 − q)`;
    /// absolute thresholds use `m = n / #{t : |X_t| ≥ a_m}`.
    pub fn scaling_m(&self, series: &SeriesMatrix, a_m: f64) -> Result<f64> {
        let n = series.len() as f64;
        match *self {
            ThresholdSpec::Quantile { level, .. } => Ok(n * (1.0 - level)),
            ThresholdSpec::Absolute(_) => {
                let count = series
                    .rows()
                    .filter(|r| Functional::AbsValue.apply(r) >= a_m)
                    .count();
                if count == 0 {
                    Err(Error::NoExceedances { threshold: a_m })
                } else {
                    Ok(n / count as f64)
                }
            }
        }
    }
}
