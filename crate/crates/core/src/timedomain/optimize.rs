//! Derivative-free minimization by the Nelder–Mead simplex method.

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    /// Whether the spread of simplex values fell below the tolerance.
    pub converged: bool,
}

/// Minimize `f` from `x0` with an axis-aligned initial simplex of edge
/// `step`. Stops when the standard deviation of the vertex values drops
/// below `tol` or after `max_iter` iterations. Non-finite values are treated
/// as `+∞`.
pub fn nelder_mead(f: impl Fn(&[f64]) -> f64, x0: &[f64], step: f64, tol: f64, max_iter: usize) -> Minimum {
    let eval = |x: &[f64]| {
        let v = f(x);
        if v.is_finite() {
            v
        } else {
            f64::INFINITY
        }
    };
    let dim = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((x0.to_vec(), eval(x0)));
    for i in 0..dim {
        let mut v = x0.to_vec();
        v[i] += step;
        let fv = eval(&v);
        simplex.push((v, fv));
    }

    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let values: Vec<f64> = simplex.iter().map(|v| v.1).collect();
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let sd = (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / values.len() as f64).sqrt();
        if sd < tol {
            converged = true;
            break;
        }
        iterations += 1;

        let centroid: Vec<f64> = (0..dim)
            .map(|j| simplex[..dim].iter().map(|v| v.0[j]).sum::<f64>() / dim as f64)
            .collect();
        let worst = simplex[dim].clone();
        let along = |t: f64| -> Vec<f64> { (0..dim).map(|j| centroid[j] + t * (worst.0[j] - centroid[j])).collect() };

        let xr = along(-alpha);
        let fr = eval(&xr);
        if fr < simplex[0].1 {
            let xe = along(-alpha * gamma);
            let fe = eval(&xe);
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
            continue;
        }
        let (xc, fc) = if fr < worst.1 {
            let xc = along(-alpha * rho);
            let fc = eval(&xc);
            (xc, fc)
        } else {
            let xc = along(rho);
            let fc = eval(&xc);
            (xc, fc)
        };
        if fc < fr.min(worst.1) {
            simplex[dim] = (xc, fc);
            continue;
        }
        let best = simplex[0].0.clone();
        for v in simplex.iter_mut().skip(1) {
            for (vj, bj) in v.0.iter_mut().zip(&best) {
                *vj = bj + sigma * (*vj - bj);
            }
            v.1 = eval(&v.0);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, value) = simplex.swap_remove(0);
    Minimum { x, value, iterations, converged }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let m = nelder_mead(f, &[-1.2, 1.0], 0.5, 1e-14, 10_000);
        assert!(m.converged);
        assert!((m.x[0] - 1.0).abs() < 1e-4 && (m.x[1] - 1.0).abs() < 1e-4, "{m:?}");
    }

    #[test]
    fn quadratic_bowl() {
        let f = |x: &[f64]| (x[0] - 3.0).powi(2) + 2.0 * (x[1] + 1.0).powi(2) + (x[2] - 0.5).powi(2);
        let m = nelder_mead(f, &[0.0, 0.0, 0.0], 1.0, 1e-16, 10_000);
        assert!((m.x[0] - 3.0).abs() < 1e-5 && (m.x[1] + 1.0).abs() < 1e-5 && (m.x[2] - 0.5).abs() < 1e-5);
    }

    #[test]
    fn iteration_cap_reports_non_convergence() {
        let f = |x: &[f64]| (x[0] - 100.0).powi(2);
        let m = nelder_mead(f, &[0.0], 0.1, 1e-30, 3);
        assert!(!m.converged);
        assert_eq!(m.iterations, 3);
    }
}
