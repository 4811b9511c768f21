//! Periodogram of the indicator sequence of an extreme event, its smoothed
//! version and permutation bands over the Fourier grid.

mod band;
mod periodogram;
mod smoothing;

pub use band::spectral_band;
pub use periodogram::{
    extremal_periodogram, fourier_frequencies, periodogram_at, periodogram_from_indicators, standardize_periodogram,
    SpectralCurve,
};
pub use smoothing::{default_half_width, smooth_values, smoothed_at, smoothed_periodogram, Window, MAX_DEFAULT_HALF_WIDTH};
