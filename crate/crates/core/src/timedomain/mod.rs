//! Time-domain estimators of extremal dependence.

mod extremogram;
mod garch;
pub mod optimize;

pub use extremogram::{
    blocks_extremal_index, cross_extremogram, lagged_counts, ratio_at_lag, sample_extremogram, tail_empirical,
    BlocksEstimate, ExtremogramCurve,
};
pub use garch::{garch11_fit, garch_filter, garch_volatility, GarchFit};
