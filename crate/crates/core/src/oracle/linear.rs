use super::{OracleMethod, OracleValue};
use crate::error::{invalid, Result};

/// Tail dependence coefficient `ρ(h)` of the causal linear process
/// `X_t = Σ ψ_j Z_{t−j}` with regularly varying noise of index `alpha` and
/// tail balance `p = P(Z > x) / P(|Z| > x)` in the limit.
pub fn rho_linear(psi: &[f64], alpha: f64, p: f64, h: usize) -> Result<OracleValue> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(invalid("alpha", format!("must be positive, got {alpha}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid("p", format!("tail balance must lie in [0, 1], got {p}")));
    }
    if psi.iter().any(|v| !v.is_finite()) {
        return Err(invalid("psi", "coefficients must be finite"));
    }
    let q = 1.0 - p;
    let pos = |v: f64| v.max(0.0);
    let neg = |v: f64| (-v).max(0.0);
    let at = |i: usize| psi.get(i).copied().unwrap_or(0.0);
    let den: f64 = psi.iter().map(|&v| p * pos(v).powf(alpha) + q * neg(v).powf(alpha)).sum();
    if !(den > 0.0) {
        return Err(invalid("psi", "tail mass is zero (all-zero coefficients or p excludes every sign)"));
    }
    let num: f64 = (0..psi.len())
        .map(|i| {
            let (a, b) = (at(i), at(i + h));
            p * pos(a).min(pos(b)).powf(alpha) + q * neg(a).min(neg(b)).powf(alpha)
        })
        .sum();
    Ok(OracleValue { value: num / den, method: OracleMethod::ClosedForm })
}
