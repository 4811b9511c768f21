//! Extremal dependence for heavy-tailed stationary time series.
//!
//! The crate simulates regularly varying models, estimates the extremal
//! index, extremogram and cross-extremogram, builds permutation and
//! stationary-bootstrap bands, computes extremal periodograms, and evaluates
//! reference values for all of these from closed forms, quadrature or Monte
//! Carlo.

// `!(x > 0.0)` is used on purpose to reject NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod density;
pub mod error;
pub mod freqdomain;
pub mod inference;
pub mod oracle;
pub mod rng;
pub mod series;
pub mod simulate;
pub mod tailset;
pub mod threshold;
pub mod timedomain;

pub use density::DensitySpec;
pub use error::{Error, Result};
pub use rng::{derive_stream, RngStream};
pub use series::SeriesMatrix;
pub use tailset::{exceedance_indicators, Direction, Piece, TailSet};
pub use threshold::{empirical_quantile, Functional, ThresholdSpec};
