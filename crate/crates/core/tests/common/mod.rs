#![allow(dead_code)]

/// Two-sided one-sample Kolmogorov–Smirnov test against a continuous cdf;
/// returns `(D, p-value)` using Stephens' small-sample correction.
pub fn ks_test(sample: &[f64], cdf: impl Fn(f64) -> f64) -> (f64, f64) {
    let mut x = sample.to_vec();
    x.sort_by(f64::total_cmp);
    let n = x.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &v) in x.iter().enumerate() {
        let f = cdf(v);
        d = d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n);
    }
    let lambda = (n.sqrt() + 0.12 + 0.11 / n.sqrt()) * d;
    let mut p = 0.0;
    for k in 1..=100 {
        let k = k as f64;
        let term = 2.0 * (-2.0 * k * k * lambda * lambda).exp();
        p += if k as i64 % 2 == 1 { term } else { -term };
    }
    (d, p.clamp(0.0, 1.0))
}

pub fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

pub fn variance(v: &[f64]) -> f64 {
    let m = mean(v);
    v.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (v.len() - 1) as f64
}

/// Hill estimator of the tail index from the `k` largest values.
pub fn hill_alpha(x: &[f64], k: usize) -> f64 {
    let mut v = x.to_vec();
    v.sort_by(|a, b| b.total_cmp(a));
    let base = v[k].ln();
    let h = v[..k].iter().map(|x| x.ln() - base).sum::<f64>() / k as f64;
    1.0 / h
}
