//! Value parsers for the compact parameter strings accepted on the command
//! line, e.g. `t:2`, `geometric:0.8:200`, `upper:1`, `power:1:1.5`.

use extremo::simulate::{geometric_psi, NoiseSpec, Variogram};
use extremo::{DensitySpec, Piece, TailSet};

fn numbers(fields: &[&str], what: &str) -> Result<Vec<f64>, String> {
    fields
        .iter()
        .map(|f| f.trim().parse::<f64>().map_err(|_| format!("{what}: `{f}` is not a number")))
        .collect()
}

fn split(s: &str) -> (String, Vec<&str>) {
    let mut it = s.split(':');
    let head = it.next().unwrap_or("").trim().to_ascii_lowercase();
    (head, it.collect())
}

fn arity(s: &str, got: usize, allowed: &[usize]) -> Result<(), String> {
    if allowed.contains(&got) {
        Ok(())
    } else {
        Err(format!("`{s}`: expected {allowed:?} numeric fields, got {got}"))
    }
}

/// `t:DOF`, `normal[:MU:SIGMA]`, `lognormal:MU:SIGMA`, `uniform:LO:HI`,
/// `pareto:ALPHA`, `const:C`.
pub fn noise(s: &str) -> Result<NoiseSpec, String> {
    let (head, rest) = split(s);
    let v = numbers(&rest, "noise")?;
    Ok(match head.as_str() {
        "t" | "student" => {
            arity(s, v.len(), &[1])?;
            NoiseSpec::StudentT { dof: v[0] }
        }
        "normal" | "gaussian" => {
            arity(s, v.len(), &[0, 2])?;
            if v.is_empty() {
                NoiseSpec::standard_normal()
            } else {
                NoiseSpec::Normal { mu: v[0], sigma: v[1] }
            }
        }
        "lognormal" => {
            arity(s, v.len(), &[2])?;
            NoiseSpec::LogNormal { mu: v[0], sigma: v[1] }
        }
        "uniform" => {
            arity(s, v.len(), &[2])?;
            NoiseSpec::Uniform { lo: v[0], hi: v[1] }
        }
        "pareto" => {
            arity(s, v.len(), &[1])?;
            NoiseSpec::Pareto { alpha: v[0] }
        }
        "const" | "constant" => {
            arity(s, v.len(), &[1])?;
            NoiseSpec::Constant(v[0])
        }
        _ => return Err(format!("unknown noise law `{head}`")),
    })
}

/// Comma-separated coefficients or `geometric:PHI:LEN`.
pub fn psi(s: &str) -> Result<Vec<f64>, String> {
    let (head, rest) = split(s);
    if head == "geometric" {
        let v = numbers(&rest, "psi")?;
        arity(s, v.len(), &[2])?;
        if !(v[1] >= 1.0 && v[1].fract() == 0.0) {
            return Err(format!("geometric length must be a positive integer, got {}", v[1]));
        }
        return Ok(geometric_psi(v[0], v[1] as usize));
    }
    let v = numbers(&s.split(',').collect::<Vec<_>>(), "psi")?;
    if v.is_empty() {
        return Err("psi needs at least one coefficient".into());
    }
    Ok(v)
}

/// `upper[:CUT]`, `lower[:CUT]`, `both[:CUT]`, `interval:LO:HI`.
pub fn tail(s: &str) -> Result<TailSet, String> {
    let (head, rest) = split(s);
    let v = numbers(&rest, "tail")?;
    let cut = || -> Result<f64, String> {
        arity(s, v.len(), &[0, 1])?;
        Ok(v.first().copied().unwrap_or(1.0))
    };
    let set = match head.as_str() {
        "upper" => TailSet::upper(cut()?),
        "lower" => TailSet::lower(cut()?),
        "both" | "abs" => TailSet::two_sided(cut()?),
        "interval" => {
            arity(s, v.len(), &[2])?;
            TailSet::univariate(vec![Piece::Interval { lo: v[0], hi: v[1] }])
        }
        _ => return Err(format!("unknown tail set `{head}`")),
    };
    set.map_err(|e| e.to_string())
}

/// `normal[:SD]`, `laplace[:SCALE]`, `uniform[:WIDTH]`.
pub fn density(s: &str) -> Result<DensitySpec, String> {
    let (head, rest) = split(s);
    let v = numbers(&rest, "density")?;
    arity(s, v.len(), &[0, 1])?;
    let p = v.first().copied().unwrap_or(1.0);
    Ok(match head.as_str() {
        "normal" | "gaussian" => DensitySpec::Normal { sd: p },
        "laplace" => DensitySpec::Laplace { scale: p },
        "uniform" => DensitySpec::Uniform { width: p },
        _ => return Err(format!("unknown density `{head}`")),
    })
}

/// `zero`, `brownian[:SCALE]`, `power:SCALE:EXPONENT`.
pub fn variogram(s: &str) -> Result<Variogram, String> {
    let (head, rest) = split(s);
    let v = numbers(&rest, "variogram")?;
    Ok(match head.as_str() {
        "zero" => {
            arity(s, v.len(), &[0])?;
            Variogram::Zero
        }
        "brownian" => {
            arity(s, v.len(), &[0, 1])?;
            Variogram::Power { scale: v.first().copied().unwrap_or(1.0), exponent: 1.0 }
        }
        "power" => {
            arity(s, v.len(), &[2])?;
            Variogram::Power { scale: v[0], exponent: v[1] }
        }
        _ => return Err(format!("unknown variogram `{head}`")),
    })
}
