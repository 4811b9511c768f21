use crate::error::{invalid, Error, Result};

/// Largest admissible `Σ |ρ(h)|` over the last ten retained lags.
pub const NON_SUMMABLE_TOL: f64 = 1e-6;

/// `f_A(λ) = 1 + 2 Σ_{h=1}^{H} ρ(h) cos(hλ)`.
///
/// The sum is accepted only when the last ten terms are negligible, which
/// rejects sequences that are not absolutely summable at this truncation.
pub fn spectral_density_oracle(rho: impl Fn(usize) -> f64, lambda: f64, trunc_h: usize) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&lambda) {
        return Err(invalid("lambda", format!("frequency must lie in [0, π], got {lambda}")));
    }
    if trunc_h < 10 {
        return Err(invalid("trunc_h", format!("need at least 10 lags, got {trunc_h}")));
    }
    let tail: f64 = (trunc_h - 9..=trunc_h).map(|h| rho(h).abs()).sum();
    if !(tail <= NON_SUMMABLE_TOL) {
        return Err(Error::NotSummable(trunc_h));
    }
    Ok(1.0 + 2.0 * (1..=trunc_h).map(|h| rho(h) * (h as f64 * lambda).cos()).sum::<f64>())
}
