//! Reference values for extremograms, extremal indices and tail indices.

mod linear;
mod maxmoving;
pub mod quadrature;
mod spectral;
mod sre;

pub use linear::rho_linear;
pub use maxmoving::{
    extremal_index_extrapolated, extremal_index_ratio, maxmoving_extremal_index, maxmoving_extremogram,
    maxmoving_pre_extremogram, pre_extremogram_from_rho, MaxMovingFamily, SpectralFamily, DEFAULT_ABS_TOL,
};
pub use spectral::{spectral_density_oracle, NON_SUMMABLE_TOL};
pub use sre::{kesten_alpha, rho_sre_mc};

/// How an oracle value was obtained, with its error measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleMethod {
    ClosedForm,
    NumericalIntegration { abs_tol: f64 },
    MonteCarlo { n_mc: usize, std_error: f64 },
}

impl OracleMethod {
    pub fn name(&self) -> &'static str {
        match self {
            OracleMethod::ClosedForm => "closed_form",
            OracleMethod::NumericalIntegration { .. } => "quadrature",
            OracleMethod::MonteCarlo { .. } => "monte_carlo",
        }
    }

    /// Tolerance or standard error; zero for closed forms.
    pub fn error(&self) -> f64 {
        match *self {
            OracleMethod::ClosedForm => 0.0,
            OracleMethod::NumericalIntegration { abs_tol } => abs_tol,
            OracleMethod::MonteCarlo { std_error, .. } => std_error,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub value: f64,
    pub method: OracleMethod,
}
