//! Classical unconstrained test functions, unshifted and unrotated.
//!
//! Each returns exactly zero at the point given by [`optimum`].

use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const UNCONSTRAINED_FUNCTIONS: [&str; 10] = [
    "sphere",
    "bent-cigar",
    "schwefel",
    "rastrigin",
    "lunacek-bi-rastrigin",
    "rosenbrock",
    "griewank",
    "ackley",
    "rosenbrock-griewank-expanded",
    "hybrid-3",
];

pub(crate) const DEFAULT_DIMENSION: usize = 10;
pub(crate) const DEFAULT_RANGE: f64 = 100.0;

const LUNACEK_MU0: f64 = 2.5;

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn bent_cigar(x: &[f64]) -> f64 {
    match x.split_first() {
        Some((first, rest)) => first * first + 1e6 * sphere(rest),
        None => 0.0,
    }
}

/// Schwefel 1.2 (cumulative-sum form).
pub fn schwefel(x: &[f64]) -> f64 {
    let mut acc = 0.0;
    let mut total = 0.0;
    for v in x {
        acc += v;
        total += acc * acc;
    }
    total
}

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0).sum()
}

pub fn lunacek_bi_rastrigin(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let s = 1.0 - 1.0 / (2.0 * (d + 20.0).sqrt() - 8.2);
    let mu1 = -((LUNACEK_MU0 * LUNACEK_MU0 - 1.0) / s).sqrt();
    let a: f64 = x.iter().map(|v| (v - LUNACEK_MU0).powi(2)).sum();
    let b: f64 = d + s * x.iter().map(|v| (v - mu1).powi(2)).sum::<f64>();
    let wave: f64 = x.iter().map(|v| 1.0 - (2.0 * PI * (v - LUNACEK_MU0)).cos()).sum();
    a.min(b) + 10.0 * wave
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[0] * w[0] - w[1]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum + (1.0 - prod)
}

pub fn ackley(x: &[f64]) -> f64 {
    let d = x.len().max(1) as f64;
    let sq = (sphere(x) / d).sqrt();
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
    // Grouped so the optimum cancels to exactly zero.
    20.0 * (1.0 - (-0.2 * sq).exp()) + (1f64.exp() - cs.exp())
}

/// Griewank applied to each consecutive Rosenbrock pair (wrapping).
pub fn rosenbrock_griewank_expanded(x: &[f64]) -> f64 {
    let n = x.len();
    if n < 2 {
        return rosenbrock_griewank_pair(x.first().copied().unwrap_or(1.0), 1.0);
    }
    (0..n).map(|i| rosenbrock_griewank_pair(x[i], x[(i + 1) % n])).sum()
}

fn rosenbrock_griewank_pair(a: f64, b: f64) -> f64 {
    let r = 100.0 * (a * a - b).powi(2) + (a - 1.0).powi(2);
    r * r / 4000.0 + (1.0 - r.cos())
}

/// Three-way hybrid: bent cigar, Schwefel 1.2 and Rastrigin on consecutive
/// 30/30/40 percent blocks of the variables.
pub fn hybrid_3(x: &[f64]) -> f64 {
    let n = x.len();
    let a = (0.3 * n as f64).ceil() as usize;
    let b = (a + (0.3 * n as f64).ceil() as usize).min(n);
    bent_cigar(&x[..a.min(n)]) + schwefel(&x[a.min(n)..b]) + rastrigin(&x[b..])
}

fn lookup(name: &str) -> Option<fn(&[f64]) -> f64> {
    Some(match name {
        "sphere" => sphere,
        "bent-cigar" => bent_cigar,
        "schwefel" => schwefel,
        "rastrigin" => rastrigin,
        "lunacek-bi-rastrigin" => lunacek_bi_rastrigin,
        "rosenbrock" => rosenbrock,
        "griewank" => griewank,
        "ackley" => ackley,
        "rosenbrock-griewank-expanded" => rosenbrock_griewank_expanded,
        "hybrid-3" => hybrid_3,
        _ => return None,
    })
}

pub(crate) fn function(name: &str) -> Option<fn(&[f64]) -> f64> {
    lookup(name)
}

/// Known global minimizer in `dim` dimensions.
pub fn optimum(name: &str, dim: usize) -> Result<Vec<f64>> {
    let value = match name {
        "rosenbrock" | "rosenbrock-griewank-expanded" => 1.0,
        "lunacek-bi-rastrigin" => LUNACEK_MU0,
        other if lookup(other).is_some() => 0.0,
        other => return Err(unknown(other)),
    };
    Ok(vec![value; dim])
}

fn unknown(name: &str) -> Error {
    Error::UnknownProblem {
        name: name.to_string(),
        suggestion: super::registry::nearest(name, UNCONSTRAINED_FUNCTIONS.iter().copied()),
    }
}

/// Evaluate a named unconstrained function at `x` (any dimension >= 1).
pub fn evaluate_unconstrained(name: &str, x: &[f64]) -> Result<f64> {
    let f = lookup(name).ok_or_else(|| unknown(name))?;
    if x.is_empty() {
        return Err(Error::Usage(format!("{name} needs at least one variable")));
    }
    Ok(f(x))
}
