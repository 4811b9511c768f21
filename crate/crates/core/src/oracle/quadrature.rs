//! Adaptive Simpson quadrature with caller-supplied breakpoints.

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 48;

/// `∫_a^b f` to absolute tolerance `tol`.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    if b <= a {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    refine(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH).ok_or(Error::QuadratureFailed { tol })
}

#[allow(clippy::too_many_arguments)]
fn refine(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Option<f64> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if !delta.is_finite() {
        return None;
    }
    if delta.abs() <= 15.0 * tol {
        return Some(left + right + delta / 15.0);
    }
    if depth == 0 {
        return None;
    }
    let l = refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)?;
    let r = refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)?;
    Some(l + r)
}

/// Integrate over `[a, b]` split at every breakpoint inside it, sharing the
/// tolerance between pieces in proportion to their length.
pub fn integrate_split(f: &impl Fn(f64) -> f64, a: f64, b: f64, breaks: &[f64], tol: f64) -> Result<f64> {
    let mut pts: Vec<f64> = breaks.iter().copied().filter(|&x| x > a && x < b).collect();
    pts.push(a);
    pts.push(b);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    let span = b - a;
    let mut total = 0.0;
    for w in pts.windows(2) {
        let piece_tol = (tol * (w[1] - w[0]) / span).max(f64::MIN_POSITIVE);
        total += adaptive_simpson(f, w[0], w[1], piece_tol)?;
    }
    Ok(total)
}
