use rand_distr::Distribution;

use super::{OracleMethod, OracleValue};
use crate::error::{invalid, Error, Result};
use crate::rng::RngStream;
use crate::simulate::NoiseSpec;

/// `κ ↦ mean |A_i|^κ` over one fixed sample, stored as logs.
struct FrozenMoments {
    logs: Vec<f64>,
}

impl FrozenMoments {
    fn draw(a: &NoiseSpec, n_mc: usize, rng: &mut RngStream) -> Result<Self> {
        let dist = a.sampler()?;
        Ok(Self { logs: (0..n_mc).map(|_| dist.sample(rng).abs().ln()).collect() })
    }

    fn n(&self) -> f64 {
        self.logs.len() as f64
    }

    /// `mean |A|^κ − 1`.
    fn excess(&self, kappa: f64) -> f64 {
        self.logs.iter().map(|l| (kappa * l).exp()).sum::<f64>() / self.n() - 1.0
    }

    /// Standard error of the moment and the derivative `mean |A|^κ ln|A|`.
    fn se_and_slope(&self, kappa: f64) -> (f64, f64) {
        let (mut s, mut s2, mut d) = (0.0, 0.0, 0.0);
        for &l in &self.logs {
            let v = (kappa * l).exp();
            s += v;
            s2 += v * v;
            if v > 0.0 {
                d += v * l;
            }
        }
        let n = self.n();
        let mean = s / n;
        let var = (s2 / n - mean * mean).max(0.0) * n / (n - 1.0).max(1.0);
        ((var / n).sqrt(), d / n)
    }
}

/// Positive root `κ` of `E|A|^κ = 1`, found by bisection on a single frozen
/// Monte Carlo sample of `A`. The reported standard error propagates the
/// moment's sampling error through the slope at the root.
pub fn kesten_alpha(
    a: &NoiseSpec,
    n_mc: usize,
    bracket: (f64, f64),
    tol: f64,
    rng: &mut RngStream,
) -> Result<OracleValue> {
    let (mut lo, mut hi) = bracket;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(invalid("bracket", format!("need 0 < lo < hi, got ({lo}, {hi})")));
    }
    if !(tol > 0.0) {
        return Err(invalid("tol", "must be positive"));
    }
    if n_mc < 2 {
        return Err(invalid("n_mc", "need at least two draws"));
    }
    let moments = FrozenMoments::draw(a, n_mc, rng)?;
    let (g_lo, g_hi) = (moments.excess(lo), moments.excess(hi));
    if !(g_lo < 0.0 && g_hi > 0.0) {
        return Err(Error::NoRoot { lo, hi });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if moments.excess(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let (se, slope) = moments.se_and_slope(root);
    Ok(OracleValue {
        value: root,
        method: OracleMethod::MonteCarlo { n_mc, std_error: se / slope.abs() },
    })
}

/// `ρ(h) = E min(1, A_1 ⋯ A_h)^α` by plain Monte Carlo.
pub fn rho_sre_mc(a: &NoiseSpec, alpha: f64, h: usize, n_mc: usize, rng: &mut RngStream) -> Result<OracleValue> {
    if !(alpha > 0.0) {
        return Err(invalid("alpha", format!("must be positive, got {alpha}")));
    }
    if h == 0 {
        return Err(invalid("h", "lag must be at least 1"));
    }
    if n_mc < 2 {
        return Err(invalid("n_mc", "need at least two draws"));
    }
    let dist = a.sampler()?;
    let (mut s, mut s2) = (0.0, 0.0);
    for _ in 0..n_mc {
        let mut prod = 1.0;
        for _ in 0..h {
            let v: f64 = dist.sample(rng);
            if !(v > 0.0) {
                return Err(invalid("a_sampler", format!("A must be positive, drew {v}")));
            }
            prod *= v;
        }
        let y = prod.min(1.0).powf(alpha);
        s += y;
        s2 += y * y;
    }
    let n = n_mc as f64;
    let mean = s / n;
    let var = (s2 / n - mean * mean).max(0.0) * n / (n - 1.0);
    Ok(OracleValue { value: mean, method: OracleMethod::MonteCarlo { n_mc, std_error: (var / n).sqrt() } })
}
