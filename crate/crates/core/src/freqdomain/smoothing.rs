use super::periodogram::SpectralCurve;
use crate::error::{invalid, Result};

/// Cap on the default half-width.
pub const MAX_DEFAULT_HALF_WIDTH: usize = 52;

#[derive(Debug, Clone, PartialEq)]
pub enum Window {
    /// Flat weights `1/(2s+1)`.
    Daniell { s: usize },
    /// Weights for offsets `−s..=s`; odd length, non-negative, summing to 1.
    Custom(Vec<f64>),
}

impl Window {
    pub fn weights(&self) -> Result<Vec<f64>> {
        match self {
            Window::Daniell { s } => {
                if *s == 0 {
                    return Err(invalid("s", "half-width must be at least 1"));
                }
                Ok(vec![1.0 / (2 * s + 1) as f64; 2 * s + 1])
            }
            Window::Custom(w) => {
                if w.len() % 2 == 0 {
                    return Err(invalid("weights", "need an odd number of weights"));
                }
                if w.iter().any(|&v| !(v >= 0.0 && v.is_finite())) {
                    return Err(invalid("weights", "weights must be non-negative"));
                }
                let total: f64 = w.iter().sum();
                if (total - 1.0).abs() > 1e-9 {
                    return Err(invalid("weights", format!("weights must sum to 1, got {total}")));
                }
                Ok(w.clone())
            }
        }
    }
}

/// `min(⌊√n / 2⌋, 52)`, at least 1.
pub fn default_half_width(n: usize) -> usize {
    (((n as f64).sqrt() / 2.0).floor() as usize).clamp(1, MAX_DEFAULT_HALF_WIDTH)
}

/// Index `i` (0-based) reflected into `0..len`: below the grid `−1 ↦ 0`,
/// `−2 ↦ 1`, …; above it `len ↦ len − 1`, ….
fn reflect(i: i64, len: i64) -> usize {
    let r = if i < 0 {
        -1 - i
    } else if i >= len {
        2 * len - 1 - i
    } else {
        i
    };
    r as usize
}

/// Weighted moving average of `values` with boundary reflection.
pub fn smooth_values(values: &[f64], weights: &[f64]) -> Result<Vec<f64>> {
    let s = (weights.len() / 2) as i64;
    let len = values.len() as i64;
    if weights.len() > values.len() {
        return Err(invalid(
            "window",
            format!("{} weights exceed the {} available frequencies", weights.len(), values.len()),
        ));
    }
    Ok((0..len)
        .map(|k| {
            weights
                .iter()
                .enumerate()
                .map(|(j, w)| w * values[reflect(k + j as i64 - s, len)])
                .sum()
        })
        .collect())
}

/// Smooth the raw periodogram at every Fourier frequency.
pub fn smoothed_periodogram(mut curve: SpectralCurve, window: &Window) -> Result<SpectralCurve> {
    let w = window.weights()?;
    curve.smoothed = Some(smooth_values(&curve.raw, &w)?);
    curve.window = Some(w);
    Ok(curve)
}

/// Smoothed value at an arbitrary `λ`, centred on the smallest Fourier
/// frequency `≥ λ`.
pub fn smoothed_at(curve: &SpectralCurve, window: &Window, lambda: f64) -> Result<f64> {
    let w = window.weights()?;
    let len = curve.raw.len() as i64;
    if w.len() as i64 > len {
        return Err(invalid("window", "window wider than the frequency grid"));
    }
    let j0 = (lambda * curve.n as f64 / (2.0 * std::f64::consts::PI) - 1e-9).ceil() as i64;
    if j0 < 1 || j0 > len {
        return Err(invalid("lambda", format!("{lambda} is outside the Fourier grid")));
    }
    let s = (w.len() / 2) as i64;
    Ok(w.iter().enumerate().map(|(j, wt)| wt * curve.raw[reflect(j0 - 1 + j as i64 - s, len)]).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn daniell_weights() {
        let w = Window::Daniell { s: 3 }.weights().unwrap();
        assert_eq!(w.len(), 7);
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hand_average() {
        let w = Window::Daniell { s: 1 }.weights().unwrap();
        let sm = smooth_values(&[1.0, 2.0, 3.0, 4.0, 5.0], &w).unwrap();
        assert!((sm[2] - 3.0).abs() < 1e-15);
        // reflected ends: (1 + 1 + 2)/3 and (4 + 5 + 5)/3
        assert!((sm[0] - 4.0 / 3.0).abs() < 1e-15);
        assert!((sm[4] - 14.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn constant_is_preserved() {
        let sm = smooth_values(&[2.5; 20], &Window::Daniell { s: 4 }.weights().unwrap()).unwrap();
        assert!(sm.iter().all(|v| (v - 2.5).abs() < 1e-14));
    }

    #[test]
    fn window_wider_than_grid() {
        assert!(smooth_values(&[1.0, 2.0], &Window::Daniell { s: 2 }.weights().unwrap()).is_err());
    }

    #[test]
    fn custom_weights_validated() {
        assert!(Window::Custom(vec![0.25, 0.5, 0.25]).weights().is_ok());
        assert!(Window::Custom(vec![0.5, 0.5]).weights().is_err());
        assert!(Window::Custom(vec![-0.5, 1.0, 0.5]).weights().is_err());
        assert!(Window::Custom(vec![0.2, 0.2, 0.2]).weights().is_err());
    }

    #[test]
    fn default_width() {
        assert_eq!(default_half_width(100), 5);
        assert_eq!(default_half_width(31_757), 52);
        assert_eq!(default_half_width(2), 1);
    }
}
