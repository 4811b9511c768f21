//! Kernel densities for max-moving processes.

use std::f64::consts::PI;

use crate::error::{invalid, Result};

/// A bounded Lebesgue density `f` on the real line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensitySpec {
    Normal { sd: f64 },
    Laplace { scale: f64 },
    /// The uniform density `1/width` on `[0, width]`.
    Uniform { width: f64 },
}

impl DensitySpec {
    pub fn standard_normal() -> Self {
        DensitySpec::Normal { sd: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        let (name, v) = match *self {
            DensitySpec::Normal { sd } => ("sd", sd),
            DensitySpec::Laplace { scale } => ("scale", scale),
            DensitySpec::Uniform { width } => ("width", width),
        };
        if v > 0.0 && v.is_finite() {
            Ok(())
        } else {
            Err(invalid(name, format!("must be positive and finite, got {v}")))
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match *self {
            DensitySpec::Normal { sd } => {
                let z = x / sd;
                (-0.5 * z * z).exp() / (sd * (2.0 * PI).sqrt())
            }
            DensitySpec::Laplace { scale } => (-x.abs() / scale).exp() / (2.0 * scale),
            DensitySpec::Uniform { width } => {
                if (0.0..=width).contains(&x) {
                    1.0 / width
                } else {
                    0.0
                }
            }
        }
    }

    pub fn sup(&self) -> f64 {
        match *self {
            DensitySpec::Normal { sd } => 1.0 / (sd * (2.0 * PI).sqrt()),
            DensitySpec::Laplace { scale } => 1.0 / (2.0 * scale),
            DensitySpec::Uniform { width } => 1.0 / width,
        }
    }

    /// Interval outside of which `f < eps · sup f`.
    pub fn support(&self, eps: f64) -> Result<(f64, f64)> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(invalid(
                "trunc_eps",
                format!("kernel truncation level must lie in (0, 1), got {eps}"),
            ));
        }
        Ok(match *self {
            DensitySpec::Normal { sd } => {
                let r = sd * (-2.0 * eps.ln()).sqrt();
                (-r, r)
            }
            DensitySpec::Laplace { scale } => {
                let r = -scale * eps.ln();
                (-r, r)
            }
            DensitySpec::Uniform { width } => (0.0, width),
        })
    }

    /// Support used for quadrature: outside it `f` underflows relative to its peak.
    pub fn quadrature_support(&self) -> (f64, f64) {
        self.support(1e-300).expect("constant level is valid")
    }

    /// Points where `f` is not smooth.
    pub fn kinks(&self) -> Vec<f64> {
        match *self {
            DensitySpec::Normal { .. } => vec![],
            DensitySpec::Laplace { .. } => vec![0.0],
            DensitySpec::Uniform { width } => vec![0.0, width],
        }
    }
}
