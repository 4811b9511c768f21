//! Max-moving processes `X_t = sup_i Γ_i^{−1/α} f(t − U_i)`: extremogram,
//! finite-threshold extremogram and extremal index from the kernel.

use rayon::prelude::*;

use super::quadrature::integrate_split;
use super::{OracleMethod, OracleValue};
use crate::density::DensitySpec;
use crate::error::{invalid, Error, Result};

pub const DEFAULT_ABS_TOL: f64 = 1e-9;

/// A family of spectral functions `y ↦ f_t(y)^α`, `t ∈ ℤ`, for the
/// extremal-index integral `∫ max_{1≤t≤n} f_t^α`.
pub trait SpectralFamily: Sync {
    /// `f_t(y)^α`.
    fn value(&self, t: i64, y: f64) -> f64;
    /// Indices in `1..=n` whose function can be positive at `y`; empty when
    /// `lo > hi`.
    fn active(&self, y: f64, n: i64) -> (i64, i64);
    /// An interval carrying the supports of `f_1, …, f_n`.
    fn domain(&self, n: i64) -> (f64, f64);
    /// Points where `max_t f_t^α` may fail to be smooth.
    fn breakpoints(&self, n: i64) -> Vec<f64>;
}

/// `f_t(y) = f(t − y)` for a kernel density `f`.
#[derive(Debug, Clone, Copy)]
pub struct MaxMovingFamily {
    density: DensitySpec,
    alpha: f64,
    lo: f64,
    hi: f64,
}

impl MaxMovingFamily {
    pub fn new(density: DensitySpec, alpha: f64) -> Result<Self> {
        density.validate()?;
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(invalid("alpha", format!("must be positive, got {alpha}")));
        }
        let (lo, hi) = density.quadrature_support();
        Ok(Self { density, alpha, lo, hi })
    }
}

impl SpectralFamily for MaxMovingFamily {
    fn value(&self, t: i64, y: f64) -> f64 {
        self.density.pdf(t as f64 - y).powf(self.alpha)
    }

    fn active(&self, y: f64, n: i64) -> (i64, i64) {
        let first = ((y + self.lo).ceil() as i64).max(1);
        let last = ((y + self.hi).floor() as i64).min(n);
        (first, last)
    }

    fn domain(&self, n: i64) -> (f64, f64) {
        (1.0 - self.hi, n as f64 - self.lo)
    }

    fn breakpoints(&self, n: i64) -> Vec<f64> {
        let (a, b) = self.domain(n);
        let mut pts: Vec<f64> = ((2.0 * a).ceil() as i64..=(2.0 * b).floor() as i64)
            .map(|k| 0.5 * k as f64)
            .collect();
        for k in self.density.kinks() {
            pts.extend((1..=n).map(|t| t as f64 - k));
        }
        pts
    }
}

/// `∫ max_{1≤t≤n} f_t^α / (n ∫ f_0^α)`.
pub fn extremal_index_ratio<F: SpectralFamily>(family: &F, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(invalid("n", "need at least one index"));
    }
    let n = n as i64;
    let envelope = |y: f64| {
        let (a, b) = family.active(y, n);
        (a..=b).map(|t| family.value(t, y)).fold(0.0, f64::max)
    };
    let (a, b) = family.domain(n);
    let mut pts = family.breakpoints(n);
    pts.retain(|&x| x > a && x < b);
    pts.push(a);
    pts.push(b);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let tol = 1e-11 * n as f64;
    let span = b - a;
    let pieces: Vec<Result<f64>> = pts
        .par_windows(2)
        .map(|w| integrate_split(&envelope, w[0], w[1], &[], tol * (w[1] - w[0]) / span))
        .collect();
    let mut total = 0.0;
    for p in pieces {
        total += p?;
    }
    // ∫ f_0^α = ∫ f_1^α by translation
    let single = |y: f64| family.value(1, y);
    let (a1, b1) = family.domain(1);
    let base = integrate_split(&single, a1, b1, &family.breakpoints(1), 1e-13)?;
    if !(base > 0.0) {
        return Err(Error::ZeroDenominator);
    }
    Ok(total / (n as f64 * base))
}

/// Two-point extrapolation `2 θ_{2n} − θ_n` of the extremal-index limit,
/// exact when `θ_n = θ + c/n`. The gap `|θ_n − θ_{2n}|` is reported as the
/// error and must not exceed `abs_tol`.
pub fn extremal_index_extrapolated<F: SpectralFamily>(family: &F, n_limit: usize, abs_tol: f64) -> Result<OracleValue> {
    if n_limit < 2 {
        return Err(invalid("n_limit", format!("need at least 2, got {n_limit}")));
    }
    let t1 = extremal_index_ratio(family, n_limit)?;
    let t2 = extremal_index_ratio(family, 2 * n_limit)?;
    let gap = (t1 - t2).abs();
    if gap > abs_tol {
        return Err(Error::ExtrapolationGap { gap, tol: abs_tol });
    }
    Ok(OracleValue { value: 2.0 * t2 - t1, method: OracleMethod::NumericalIntegration { abs_tol: gap } })
}

pub fn maxmoving_extremal_index(density: &DensitySpec, alpha: f64, n_limit: usize, abs_tol: f64) -> Result<OracleValue> {
    extremal_index_extrapolated(&MaxMovingFamily::new(*density, alpha)?, n_limit, abs_tol)
}

/// `∫ f_0^α ∧ ((a/b) f_h)^α / (a^α ∫ f_0^α)`, the extremogram of the sets
/// `(a, ∞)` and `(b, ∞)` normalized by the upper tail of `X_0`. With
/// `a = b = 1` this is the tail dependence coefficient `ρ(h)`.
pub fn maxmoving_extremogram(
    density: &DensitySpec,
    alpha: f64,
    a: f64,
    b: f64,
    h: usize,
    abs_tol: f64,
) -> Result<OracleValue> {
    density.validate()?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(invalid("alpha", format!("must be positive, got {alpha}")));
    }
    if !(a > 0.0 && b > 0.0) {
        return Err(invalid("a, b", "set cuts must be positive"));
    }
    if !(abs_tol > 0.0) {
        return Err(invalid("abs_tol", "must be positive"));
    }
    let (i0, imin) = kernel_integrals(density, alpha, (a / b).powf(alpha), h, abs_tol)?;
    Ok(OracleValue {
        value: imin / (a.powf(alpha) * i0),
        method: OracleMethod::NumericalIntegration { abs_tol },
    })
}

/// `(∫ f_0^α, ∫ f_0^α ∧ c f_h^α)` with `f_t(y) = f(t − y)`.
fn kernel_integrals(density: &DensitySpec, alpha: f64, c: f64, h: usize, tol: f64) -> Result<(f64, f64)> {
    let (lo, hi) = density.quadrature_support();
    let h = h as f64;
    let f0 = |y: f64| density.pdf(-y).powf(alpha);
    let both = |y: f64| f0(y).min(c * density.pdf(h - y).powf(alpha));
    let kinks = density.kinks();
    let mut breaks: Vec<f64> = kinks.iter().map(|k| -k).collect();
    let i0 = integrate_split(&f0, -hi, -lo, &breaks, 0.1 * tol)?;
    breaks.extend(kinks.iter().map(|k| h - k));
    breaks.push(0.5 * h);
    let (a, b) = ((-hi).min(h - hi), (-lo).max(h - lo));
    let imin = integrate_split(&both, a, b, &breaks, 0.1 * tol)?;
    Ok((i0, imin))
}

/// Finite-threshold extremogram `P(X_h > a_m | X_0 > a_m)` of a max-stable
/// pair with tail dependence coefficient `rho`, at the level
/// `a_m = (m ∫ f_0^α)^{1/α}` where `P(X_0 > a_m) = 1 − e^{−1/m}`.
///
/// From the bivariate law `P(X_0 ≤ x, X_h ≤ x) = exp(−x^{−α} ∫ f_0^α ∨ f_h^α)`
/// and `∫ f_0^α ∨ f_h^α = (2 − ρ) ∫ f_0^α`.
pub fn pre_extremogram_from_rho(rho: f64, m: f64) -> f64 {
    let x = 1.0 / m;
    (-2.0 * (-x).exp_m1() + (-(2.0 - rho) * x).exp_m1()) / -(-x).exp_m1()
}

pub fn maxmoving_pre_extremogram(density: &DensitySpec, alpha: f64, m: f64, h: usize) -> Result<OracleValue> {
    if !(m > 0.0 && m.is_finite()) {
        return Err(invalid("m", format!("must be positive, got {m}")));
    }
    let tol = 1e-13;
    let rho = maxmoving_extremogram(density, alpha, 1.0, 1.0, h, tol)?.value;
    Ok(OracleValue {
        value: pre_extremogram_from_rho(rho, m),
        method: OracleMethod::NumericalIntegration { abs_tol: tol },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::distribution::{ContinuousCDF, Normal};

    fn two_tail(h: f64) -> f64 {
        2.0 * Normal::new(0.0, 1.0).unwrap().sf(h / 2.0)
    }

    #[test]
    fn normal_kernel_matches_closed_form() {
        let d = DensitySpec::standard_normal();
        for h in 0..6 {
            let v = maxmoving_extremogram(&d, 1.0, 1.0, 1.0, h, 1e-10).unwrap().value;
            assert!((v - two_tail(h as f64)).abs() < 1e-8, "h={h}: {v}");
        }
    }

    #[test]
    fn pre_extremogram_limits() {
        let d = DensitySpec::standard_normal();
        assert!((maxmoving_pre_extremogram(&d, 1.0, 50.0, 0).unwrap().value - 1.0).abs() < 1e-12);
        let rho = two_tail(1.0);
        for m in [1e3, 1e4, 1e5] {
            let v = maxmoving_pre_extremogram(&d, 1.0, m, 1).unwrap().value;
            assert!((v - rho).abs() < 10.0 / m);
        }
    }

    #[test]
    fn pre_extremogram_first_order_term() {
        // ρ_m − ρ ≈ (1 − ρ)(1 − ρ/2)/m
        let rho = 0.6;
        let m = 1e6;
        let dev = pre_extremogram_from_rho(rho, m) - rho;
        assert!((dev * m - 0.4 * 0.7).abs() < 1e-5);
    }

    struct Identical;

    impl SpectralFamily for Identical {
        fn value(&self, _t: i64, y: f64) -> f64 {
            if (0.0..=1.0).contains(&y) {
                1.0
            } else {
                0.0
            }
        }
        fn active(&self, _y: f64, n: i64) -> (i64, i64) {
            (1, n)
        }
        fn domain(&self, _n: i64) -> (f64, f64) {
            (0.0, 1.0)
        }
        fn breakpoints(&self, _n: i64) -> Vec<f64> {
            vec![1.0]
        }
    }

    #[test]
    fn identical_functions_give_reciprocal() {
        for n in [1, 4, 10] {
            let r = extremal_index_ratio(&Identical, n).unwrap();
            assert!((r - 1.0 / n as f64).abs() < 1e-12);
        }
        let v = extremal_index_extrapolated(&Identical, 8, 1.0).unwrap();
        assert!(v.value.abs() < 1e-12);
        assert!(extremal_index_extrapolated(&Identical, 8, 1e-3).is_err());
    }

    #[test]
    fn disjoint_supports_give_one() {
        let v = maxmoving_extremal_index(&DensitySpec::Uniform { width: 1.0 }, 1.0, 16, 1e-9).unwrap();
        assert!((v.value - 1.0).abs() < 1e-9);
    }
}
