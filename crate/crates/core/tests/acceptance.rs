//! Acceptance suite: one PASS/FAIL line per criterion, with runtimes.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use extremo::freqdomain::{
    default_half_width, extremal_periodogram, smoothed_periodogram, standardize_periodogram, Window,
};
use extremo::inference::{permutation_band_lag1, ExtremogramConfig};
use extremo::oracle::{kesten_alpha, maxmoving_extremogram, maxmoving_pre_extremogram, rho_sre_mc, spectral_density_oracle};
use extremo::simulate::{
    geometric_psi, sim_ar1, sim_garch11, sim_linear, sim_max_moving, sim_sre, Garch11Params, MaxStableOptions,
    NoiseSpec, DEFAULT_BURN_IN,
};
use extremo::timedomain::{blocks_extremal_index, garch11_fit, garch_filter, sample_extremogram};
use extremo::{derive_stream, DensitySpec, Functional, SeriesMatrix, TailSet, ThresholdSpec};

struct Outcome {
    pass: bool,
    detail: String,
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn upper_rho(series: &SeriesMatrix, q: f64, max_lag: usize) -> Vec<f64> {
    let up = TailSet::upper(1.0).unwrap();
    sample_extremogram(series, &up, &up, &ThresholdSpec::quantile(q, Functional::Upper), max_lag)
        .unwrap()
        .estimates
}

fn c1_extremal_index() -> Outcome {
    let up = TailSet::upper(1.0).unwrap();
    let th = ThresholdSpec::quantile(0.98, Functional::Upper);
    let thetas: Vec<f64> = (0..20u64)
        .into_par_iter()
        .map(|seed| {
            let x = sim_ar1(0.8, &NoiseSpec::StudentT { dof: 2.0 }, 20_000, DEFAULT_BURN_IN, &mut derive_stream(seed, 1))
                .unwrap();
            blocks_extremal_index(&x, 24, &up, &th).unwrap().theta
        })
        .collect();
    let m = mean(&thetas);
    Outcome { pass: (0.29..=0.45).contains(&m), detail: format!("mean theta_hat = {m:.4} (target [0.29, 0.45])") }
}

fn c2_linear() -> Outcome {
    let psi = geometric_psi(0.8, 200);
    let r1: Vec<f64> = (0..20u64)
        .into_par_iter()
        .map(|seed| {
            let x = sim_linear(&psi, &NoiseSpec::Pareto { alpha: 2.0 }, 200, 100_000, &mut derive_stream(seed, 2)).unwrap();
            upper_rho(&x, 0.98, 1)[1]
        })
        .collect();
    let m = mean(&r1);
    Outcome { pass: (m - 0.64).abs() <= 0.12, detail: format!("mean rho_hat(1) = {m:.4} vs 0.64 (tol 0.12)") }
}

fn c3_max_moving() -> Outcome {
    let d = DensitySpec::standard_normal();
    let o1 = maxmoving_extremogram(&d, 1.0, 1.0, 1.0, 1, 1e-10).unwrap().value;
    let o4 = maxmoving_extremogram(&d, 1.0, 1.0, 1.0, 4, 1e-10).unwrap().value;
    let est: Vec<(f64, f64)> = (0..10u64)
        .into_par_iter()
        .map(|seed| {
            let x = sim_max_moving(&d, 1.0, 50_000, &MaxStableOptions::default(), &mut derive_stream(seed, 3)).unwrap();
            let r = upper_rho(&x, 0.98, 4);
            (r[1], r[4])
        })
        .collect();
    let m1 = mean(&est.iter().map(|e| e.0).collect::<Vec<_>>());
    let m4 = mean(&est.iter().map(|e| e.1).collect::<Vec<_>>());
    Outcome {
        pass: (m1 - 0.6171).abs() <= 0.07 && (m4 - 0.0455).abs() <= 0.04,
        detail: format!(
            "rho_hat(1) = {m1:.4} vs 0.6171, rho_hat(4) = {m4:.4} vs 0.0455 (quadrature {o1:.4}, {o4:.4})"
        ),
    }
}

fn c4_pre_asymptotic() -> Outcome {
    let d = DensitySpec::standard_normal();
    let rho = maxmoving_extremogram(&d, 1.0, 1.0, 1.0, 1, 1e-13).unwrap().value;
    let ms = [1e2, 1e3, 1e4];
    let pts: Vec<(f64, f64)> = ms
        .iter()
        .map(|&m| {
            let v = maxmoving_pre_extremogram(&d, 1.0, m, 1).unwrap().value;
            (m.ln(), (v - rho).abs().ln())
        })
        .collect();
    let mx = mean(&pts.iter().map(|p| p.0).collect::<Vec<_>>());
    let my = mean(&pts.iter().map(|p| p.1).collect::<Vec<_>>());
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = sxy / sxx;
    Outcome { pass: (-1.15..=-0.85).contains(&slope), detail: format!("log-log slope = {slope:.4} (target [-1.15, -0.85])") }
}

fn c5_kesten() -> Outcome {
    let u = kesten_alpha(&NoiseSpec::Uniform { lo: 0.0, hi: 2.0 }, 1_000_000, (0.1, 10.0), 1e-10, &mut derive_stream(5, 0))
        .unwrap()
        .value;
    let l = kesten_alpha(&NoiseSpec::LogNormal { mu: -1.0, sigma: 1.0 }, 1_000_000, (0.1, 10.0), 1e-10, &mut derive_stream(5, 1))
        .unwrap()
        .value;
    Outcome {
        pass: (u - 1.0).abs() <= 0.02 && (l - 2.0).abs() <= 0.05,
        detail: format!("U(0,2) root = {u:.4} (tol 0.02), LogNormal(-1,1) root = {l:.4} (tol 0.05)"),
    }
}

fn c6_sre() -> Outcome {
    let a = NoiseSpec::Uniform { lo: 0.0, hi: 2.0 };
    let mc = rho_sre_mc(&a, 1.0, 1, 1_000_000, &mut derive_stream(6, 0)).unwrap();
    let se = mc.method.error();
    let oracle_ok = (mc.value - 0.75).abs() <= 3.0 * se;
    let r1: Vec<f64> = (0..10u64)
        .into_par_iter()
        .map(|seed| {
            let x = sim_sre(&a, &NoiseSpec::Constant(1.0), 100_000, DEFAULT_BURN_IN, &mut derive_stream(seed, 6)).unwrap();
            upper_rho(&x, 0.98, 1)[1]
        })
        .collect();
    let m = mean(&r1);
    Outcome {
        pass: oracle_ok && (m - mc.value).abs() <= 0.06,
        detail: format!("MC oracle = {:.4} ± {se:.4} vs 0.75; mean rho_hat(1) = {m:.4} (tol 0.06)", mc.value),
    }
}

fn c7_permutation_null() -> Outcome {
    let up = TailSet::upper(1.0).unwrap();
    let config = ExtremogramConfig {
        a: up.clone(),
        b: up,
        threshold: ThresholdSpec::quantile(0.96, Functional::Upper),
        max_lag: 40,
    };
    let good: Vec<bool> = (0..50u64)
        .into_par_iter()
        .map(|seed| {
            let x = sim_ar1(0.0, &NoiseSpec::standard_normal(), 6000, 0, &mut derive_stream(seed, 7)).unwrap();
            let curve = config.estimate(&x).unwrap();
            let (lo, hi) = permutation_band_lag1(&x, &config, 99, 0.98, &derive_stream(seed, 70)).unwrap();
            let inside = curve.estimates[1..].iter().filter(|&&r| r >= lo && r <= hi).count();
            inside >= 38
        })
        .collect();
    let k = good.iter().filter(|&&g| g).count();
    Outcome { pass: k * 10 >= 9 * 50, detail: format!("{k}/50 seeds with >= 38 of 40 lags inside (need 45)") }
}

fn c8_exponential_limit() -> Outcome {
    let n = 1 << 14;
    let up = TailSet::upper(1.0).unwrap();
    let th = ThresholdSpec::quantile(0.98, Functional::Upper);
    let j_max = (n - 1) / 2;
    let picks: Vec<usize> = (1..=5).map(|k| k * j_max / 6).collect();
    let rows: Vec<Vec<f64>> = (0..500u64)
        .into_par_iter()
        .map(|seed| {
            let x = sim_ar1(0.0, &NoiseSpec::standard_normal(), n, 0, &mut derive_stream(seed, 8)).unwrap();
            let c = extremal_periodogram(&x, &up, &th).unwrap();
            let p = c.tail_estimate();
            let s = standardize_periodogram(c, p).unwrap().standardized.unwrap();
            picks.iter().map(|&j| s[j - 1]).collect()
        })
        .collect();
    let mut pass = true;
    let mut parts = Vec::new();
    for k in 0..picks.len() {
        let col: Vec<f64> = rows.iter().map(|r| r[k]).collect();
        let m = mean(&col);
        let v = col.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (col.len() - 1) as f64;
        pass &= (0.85..=1.15).contains(&m) && (0.8..=1.2).contains(&v);
        parts.push(format!("j={}: mean {m:.3} var {v:.3}", picks[k]));
    }
    Outcome { pass, detail: parts.join("; ") }
}

fn c9_consistency() -> Outcome {
    let phi: f64 = 0.8;
    let psi = geometric_psi(phi, 200);
    let rho = |h: usize| (phi * phi).powi(h as i32);
    let up = TailSet::upper(1.0).unwrap();
    let th = ThresholdSpec::quantile(0.98, Functional::Upper);
    let mut mses = Vec::new();
    for (i, &n) in [1usize << 11, 1 << 13, 1 << 15].iter().enumerate() {
        let window = Window::Daniell { s: default_half_width(n) };
        let per_seed: Vec<f64> = (0..20u64)
            .into_par_iter()
            .map(|seed| {
                let x = sim_linear(&psi, &NoiseSpec::Pareto { alpha: 2.0 }, 200, n, &mut derive_stream(seed, 90 + i as u64))
                    .unwrap();
                let c = extremal_periodogram(&x, &up, &th).unwrap();
                let p = c.tail_estimate();
                let c = smoothed_periodogram(c, &window).unwrap();
                let sm = c.smoothed.as_ref().unwrap();
                let se: f64 = c
                    .frequencies
                    .iter()
                    .zip(sm)
                    .map(|(&l, &v)| (v / p - spectral_density_oracle(rho, l, 400).unwrap()).powi(2))
                    .sum();
                se / sm.len() as f64
            })
            .collect();
        mses.push(mean(&per_seed));
    }
    let pass = mses.windows(2).all(|w| w[1] < w[0]);
    Outcome { pass, detail: format!("MSE at n = 2^11, 2^13, 2^15: {:.4}, {:.4}, {:.4}", mses[0], mses[1], mses[2]) }
}

fn c10_garch_filter() -> Outcome {
    let p = Garch11Params { alpha0: 1e-6, alpha1: 0.1, beta1: 0.88 };
    let low = TailSet::lower(1.0).unwrap();
    let config = ExtremogramConfig {
        a: low.clone(),
        b: low,
        threshold: ThresholdSpec::quantile(0.96, Functional::Lower),
        max_lag: 40,
    };
    let res: Vec<(bool, bool)> = (0..20u64)
        .into_par_iter()
        .map(|seed| {
            let (x, _) = sim_garch11(&p, &NoiseSpec::standard_normal(), 20_000, DEFAULT_BURN_IN, &mut derive_stream(seed, 10))
                .unwrap();
            let raw = config.estimate(&x).unwrap();
            let (_, hi) = permutation_band_lag1(&x, &config, 99, 0.98, &derive_stream(seed, 100)).unwrap();
            let raw_out = raw.estimates[1] > hi;
            let fit = garch11_fit(&x, None).unwrap();
            let z = garch_filter(&x, &fit).unwrap();
            let filt = config.estimate(&z).unwrap();
            let (lo, hi) = permutation_band_lag1(&z, &config, 99, 0.98, &derive_stream(seed, 101)).unwrap();
            let inside = filt.estimates[1..].iter().filter(|&&r| r >= lo && r <= hi).count();
            (raw_out, inside as f64 >= 0.95 * 40.0)
        })
        .collect();
    let a = res.iter().filter(|r| r.0).count();
    let b = res.iter().filter(|r| r.1).count();
    Outcome {
        pass: a * 10 >= 8 * 20 && b * 10 >= 8 * 20,
        detail: format!("raw outside band at h=1 in {a}/20 seeds; filtered >= 95% inside in {b}/20 seeds (need 16 each)"),
    }
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        ("extremal index recovery", c1_extremal_index, Duration::from_secs(10)),
        ("linear-process extremogram", c2_linear, Duration::from_secs(30)),
        ("max-moving extremogram", c3_max_moving, Duration::from_secs(60)),
        ("pre-asymptotic bias law", c4_pre_asymptotic, Duration::from_secs(1)),
        ("Kesten root solver", c5_kesten, Duration::from_secs(5)),
        ("SRE extremogram", c6_sre, Duration::from_secs(30)),
        ("permutation-band null calibration", c7_permutation_null, Duration::from_secs(60)),
        ("periodogram exponential limit", c8_exponential_limit, Duration::from_secs(300)),
        ("smoothed-periodogram consistency", c9_consistency, Duration::from_secs(300)),
        ("GARCH filter property", c10_garch_filter, Duration::from_secs(300)),
    ];
    let only: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        if only.is_some_and(|k| k != i + 1) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let ok = out.pass && elapsed <= *limit;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} | {} | {:.2}s (limit {}s)",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
