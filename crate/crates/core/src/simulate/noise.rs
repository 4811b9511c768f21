use rand::Rng;
use rand_distr::{Distribution, LogNormal, Normal, Pareto, StudentT, Uniform};

use crate::error::{invalid, Result};

/// Law of an iid innovation sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NoiseSpec {
    StudentT { dof: f64 },
    Normal { mu: f64, sigma: f64 },
    LogNormal { mu: f64, sigma: f64 },
    Uniform { lo: f64, hi: f64 },
    /// Pareto with unit scale: `P(Z > x) = x^{-alpha}`, `x ≥ 1`.
    Pareto { alpha: f64 },
    /// A degenerate law at one point.
    Constant(f64),
}

/// A ready-to-draw sampler for a [`NoiseSpec`].
#[derive(Debug, Clone, Copy)]
pub enum Noise {
    StudentT(StudentT<f64>),
    Normal(Normal<f64>),
    LogNormal(LogNormal<f64>),
    Uniform(Uniform<f64>),
    Pareto(Pareto<f64>),
    Constant(f64),
}

impl NoiseSpec {
    pub fn standard_normal() -> Self {
        NoiseSpec::Normal { mu: 0.0, sigma: 1.0 }
    }

    pub fn sampler(&self) -> Result<Noise> {
        let bad = |name, e: &dyn std::fmt::Display| invalid(name, e.to_string());
        Ok(match *self {
            NoiseSpec::StudentT { dof } => {
                if !(dof > 0.0) {
                    return Err(invalid("dof", format!("must be positive, got {dof}")));
                }
                Noise::StudentT(StudentT::new(dof).map_err(|e| bad("dof", &e))?)
            }
            NoiseSpec::Normal { mu, sigma } => {
                if !(sigma >= 0.0) {
                    return Err(invalid("sigma", format!("must be non-negative, got {sigma}")));
                }
                Noise::Normal(Normal::new(mu, sigma).map_err(|e| bad("sigma", &e))?)
            }
            NoiseSpec::LogNormal { mu, sigma } => {
                if !(sigma >= 0.0) {
                    return Err(invalid("sigma", format!("must be non-negative, got {sigma}")));
                }
                Noise::LogNormal(LogNormal::new(mu, sigma).map_err(|e| bad("sigma", &e))?)
            }
            NoiseSpec::Uniform { lo, hi } => {
                if !(lo < hi) {
                    return Err(invalid("uniform", format!("need lo < hi, got [{lo}, {hi})")));
                }
                Noise::Uniform(Uniform::new(lo, hi).map_err(|e| bad("uniform", &e))?)
            }
            NoiseSpec::Pareto { alpha } => {
                if !(alpha > 0.0) {
                    return Err(invalid("alpha", format!("must be positive, got {alpha}")));
                }
                Noise::Pareto(Pareto::new(1.0, alpha).map_err(|e| bad("alpha", &e))?)
            }
            NoiseSpec::Constant(c) => {
                if !c.is_finite() {
                    return Err(invalid("constant", "must be finite"));
                }
                Noise::Constant(c)
            }
        })
    }
}

impl Distribution<f64> for Noise {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Noise::StudentT(d) => d.sample(rng),
            Noise::Normal(d) => d.sample(rng),
            Noise::LogNormal(d) => d.sample(rng),
            Noise::Uniform(d) => d.sample(rng),
            Noise::Pareto(d) => d.sample(rng),
            Noise::Constant(c) => *c,
        }
    }
}
