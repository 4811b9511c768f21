//! Max-stable processes from their Poisson spectral representation.
//!
//! Both simulators generate the points `Γ_1 < Γ_2 < …` of a unit-rate Poisson
//! process in increasing order and stop once the largest value any further
//! point can contribute falls below the current minimum of the grid, after
//! which no coordinate can change.

use rand::Rng;
use rand_distr::{Distribution, Exp, StandardNormal};

use crate::density::DensitySpec;
use crate::error::{invalid, Error, Result};
use crate::rng::RngStream;
use crate::series::SeriesMatrix;

pub const DEFAULT_TRUNC_EPS: f64 = 1e-6;
pub const DEFAULT_POINT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxStableOptions {
    /// Kernel values below `trunc_eps · sup f` are dropped.
    pub trunc_eps: f64,
    /// Half-width added on each side of the grid for the kernel centres;
    /// defaults to the truncated kernel's reach.
    pub window_pad: Option<f64>,
    pub point_budget: usize,
}

impl Default for MaxStableOptions {
    fn default() -> Self {
        Self {
            trunc_eps: DEFAULT_TRUNC_EPS,
            window_pad: None,
            point_budget: DEFAULT_POINT_BUDGET,
        }
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(invalid("alpha", format!("must be positive, got {alpha}")))
    }
}

/// Running maximum over a grid with a cached lower bound on its minimum.
struct Envelope {
    values: Vec<f64>,
    floor: f64,
    since_refresh: usize,
}

impl Envelope {
    fn new(n: usize) -> Self {
        Self { values: vec![0.0; n], floor: 0.0, since_refresh: 0 }
    }

    /// Whether nothing at or below `level` can change the envelope any more.
    fn settled(&mut self, level: f64) -> bool {
        if level < self.floor {
            return true;
        }
        self.since_refresh += 1;
        if self.since_refresh >= self.values.len().max(64) {
            self.since_refresh = 0;
            self.floor = self.values.iter().copied().fold(f64::INFINITY, f64::min);
            return level < self.floor;
        }
        false
    }
}

/// `X_t = sup_i Γ_i^{−1/α} f(t − U_i)`, `t = 1..n`, with `(Γ_i, U_i)` a unit
/// rate Poisson process on `(0, ∞) × ℝ`.
///
/// The kernel is cut to the interval where `f ≥ trunc_eps · sup f`, so only
/// centres within that reach of the grid matter; the marginal law is then
/// Fréchet with scale `(∫ f^α)^{1/α}` up to the discarded kernel mass.
pub fn sim_max_moving(
    density: &DensitySpec,
    alpha: f64,
    n: usize,
    opts: &MaxStableOptions,
    rng: &mut RngStream,
) -> Result<SeriesMatrix> {
    check_alpha(alpha)?;
    density.validate()?;
    if n == 0 {
        return Err(Error::EmptyInput("grid"));
    }
    let (lo, hi) = density.support(opts.trunc_eps)?;
    let reach = hi.max(-lo);
    let pad = match opts.window_pad {
        Some(l) if l < reach => {
            return Err(invalid(
                "window_pad",
                format!("{l} is below the truncated kernel reach {reach}"),
            ))
        }
        Some(l) => l,
        None => reach,
    };
    let (u_lo, u_hi) = (1.0 - pad, n as f64 + pad);
    let width = u_hi - u_lo;
    let spacing = Exp::new(width).expect("positive rate");
    let sup = density.sup();

    let mut env = Envelope::new(n);
    let mut gamma = 0.0;
    for _ in 0..opts.point_budget {
        gamma += spacing.sample(rng);
        let v = gamma.powf(-1.0 / alpha);
        if env.settled(v * sup) {
            return SeriesMatrix::from_column(env.values);
        }
        let u = u_lo + width * rng.random::<f64>();
        // grid points t (1-based) with t − u inside [lo, hi]
        let first = ((u + lo).ceil().max(1.0)) as usize;
        let last = (u + hi).floor().min(n as f64);
        if last < 1.0 {
            continue;
        }
        for t in first..=last as usize {
            let val = v * density.pdf(t as f64 - u);
            let slot = &mut env.values[t - 1];
            if val > *slot {
                *slot = val;
            }
        }
    }
    Err(Error::PointBudgetExceeded { budget: opts.point_budget })
}

/// Variogram `V(h) = Var(W(t + h) − W(t))` of the Gaussian driver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Variogram {
    /// `W ≡ 0`.
    Zero,
    /// `V(h) = scale · |h|^exponent`; `exponent = 1` is Brownian motion.
    Power { scale: f64, exponent: f64 },
}

impl Variogram {
    pub fn eval(&self, h: f64) -> f64 {
        match *self {
            Variogram::Zero => 0.0,
            Variogram::Power { scale, exponent } => scale * h.abs().powf(exponent),
        }
    }
}

/// Lower-triangular factor of a positive semidefinite matrix (row-major,
/// `dim × dim`). Zero pivots are allowed; clearly negative ones are not.
pub fn cholesky_psd(a: &[f64], dim: usize) -> Result<Vec<f64>> {
    let scale = (0..dim).map(|i| a[i * dim + i].abs()).fold(0.0, f64::max).max(1.0);
    let tol = 1e-10 * scale;
    let mut l = vec![0.0; dim * dim];
    for j in 0..dim {
        let mut d = a[j * dim + j];
        for k in 0..j {
            d -= l[j * dim + k] * l[j * dim + k];
        }
        if d < -tol {
            return Err(Error::NotPositiveDefinite { pivot: j, value: d });
        }
        let d = d.max(0.0).sqrt();
        l[j * dim + j] = d;
        for i in j + 1..dim {
            let mut s = a[i * dim + j];
            for k in 0..j {
                s -= l[i * dim + k] * l[j * dim + k];
            }
            l[i * dim + j] = if d > 0.0 { s / d } else { 0.0 };
        }
    }
    Ok(l)
}

/// Covariance of `W` at lags `−1, …, −(n−1), 1, …, n−1` (in that order),
/// `C(s, t) = (V(s) + V(t) − V(s − t)) / 2`.
fn grid_covariance(v: &Variogram, n: usize) -> Vec<f64> {
    let lags: Vec<f64> = (1..n).map(|k| -(k as f64)).chain((1..n).map(|k| k as f64)).collect();
    let dim = lags.len();
    let mut cov = vec![0.0; dim * dim];
    for (i, &s) in lags.iter().enumerate() {
        for (j, &t) in lags.iter().enumerate() {
            cov[i * dim + j] = 0.5 * (v.eval(s) + v.eval(t) - v.eval(s - t));
        }
    }
    cov
}

/// Samples `W(−(n−1)), …, W(n−1)` anchored at `W(0) = 0`.
enum PathSampler {
    Zero,
    Brownian { n: usize, sd: f64 },
    Dense { n: usize, factor: Vec<f64> },
}

impl PathSampler {
    fn new(v: &Variogram, n: usize) -> Result<Self> {
        Ok(match *v {
            Variogram::Zero => PathSampler::Zero,
            Variogram::Power { scale, exponent } => {
                if !(scale >= 0.0 && scale.is_finite()) {
                    return Err(invalid("variogram scale", format!("must be non-negative, got {scale}")));
                }
                if !(exponent > 0.0) {
                    return Err(invalid("variogram exponent", format!("must be positive, got {exponent}")));
                }
                if scale == 0.0 {
                    PathSampler::Zero
                } else if exponent == 1.0 {
                    PathSampler::Brownian { n, sd: scale.sqrt() }
                } else {
                    let cov = grid_covariance(v, n);
                    let dim = 2 * (n - 1);
                    PathSampler::Dense { n, factor: cholesky_psd(&cov, dim)? }
                }
            }
        })
    }

    /// Fill `w[k + n − 1] = W(k)` for `k = −(n−1)..n−1`.
    fn sample<R: Rng>(&self, rng: &mut R, w: &mut [f64]) {
        match self {
            PathSampler::Zero => w.fill(0.0),
            PathSampler::Brownian { n, sd } => {
                let mid = n - 1;
                w[mid] = 0.0;
                for k in 1..*n {
                    let e: f64 = rng.sample(StandardNormal);
                    w[mid + k] = w[mid + k - 1] + sd * e;
                    let e: f64 = rng.sample(StandardNormal);
                    w[mid - k] = w[mid - k + 1] + sd * e;
                }
            }
            PathSampler::Dense { n, factor } => {
                let dim = 2 * (n - 1);
                let z: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
                let mid = n - 1;
                w[mid] = 0.0;
                for i in 0..dim {
                    let row = &factor[i * dim..i * dim + i + 1];
                    let x: f64 = row.iter().zip(&z).map(|(l, e)| l * e).sum();
                    // entries 0..n−1 are lags −1, −2, …; the rest +1, +2, …
                    if i < n - 1 {
                        w[mid - 1 - i] = x;
                    } else {
                        w[mid + 1 + (i - (n - 1))] = x;
                    }
                }
            }
        }
    }
}

/// Brown–Resnick process on `t = 1..n`.
///
/// Spectral functions `exp(W(t) − V(t)/2)` are unbounded, so the naive
/// truncated supremum never reaches a safe stopping point. Each point instead
/// uses the shifted and self-normalized function
/// `Y(t) = n · Z(t − T) / Σ_s Z(s − T)` with `T` uniform on the grid and
/// `Z(k) = exp(W(k) − V(k)/2)`, which has the same exponent measure on the
/// grid and is bounded by `n`; the stopping rule is then exact. The result is
/// transformed to `α`-Fréchet margins by `X = X₁^{1/α}`.
///
/// General power variograms use a dense Cholesky factor of size `2(n−1)`.
pub fn sim_brown_resnick(
    variogram: &Variogram,
    alpha: f64,
    n: usize,
    opts: &MaxStableOptions,
    rng: &mut RngStream,
) -> Result<SeriesMatrix> {
    check_alpha(alpha)?;
    if n == 0 {
        return Err(Error::EmptyInput("grid"));
    }
    if !(opts.trunc_eps > 0.0) {
        return Err(invalid("trunc_eps", "must be positive"));
    }
    let sampler = PathSampler::new(variogram, n)?;
    let half_var: Vec<f64> = (0..2 * n - 1)
        .map(|i| 0.5 * variogram.eval(i as f64 - (n - 1) as f64))
        .collect();
    let mut w = vec![0.0; 2 * n - 1];
    let mut y = vec![0.0; n];
    let mut env = Envelope::new(n);
    let mut gamma = 0.0;
    let bound = n as f64;
    for _ in 0..opts.point_budget {
        gamma += rng.sample::<f64, _>(Exp::new(1.0).expect("unit rate"));
        let v = 1.0 / gamma;
        if env.settled(v * bound) {
            let inv = 1.0 / alpha;
            return SeriesMatrix::from_column(env.values.iter().map(|x| x.powf(inv)).collect());
        }
        let shift = rng.random_range(0..n);
        sampler.sample(rng, &mut w);
        // Z(t − T) for t = 0..n−1 sits at index t − T + n − 1; log-sum-exp for stability
        let base = n - 1 - shift;
        let mut peak = f64::NEG_INFINITY;
        for (t, yt) in y.iter_mut().enumerate() {
            let k = base + t;
            *yt = w[k] - half_var[k];
            peak = peak.max(*yt);
        }
        let total: f64 = y.iter().map(|l| (l - peak).exp()).sum();
        for (slot, yt) in env.values.iter_mut().zip(&y) {
            let val = v * bound * (yt - peak).exp() / total;
            if val > *slot {
                *slot = val;
            }
        }
    }
    Err(Error::PointBudgetExceeded { budget: opts.point_budget })
}
