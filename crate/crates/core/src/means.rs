//! Weighted arithmetic, geometric and power means, and weighted variances.
//!
//! All reductions are compensated. Variances use the corrected two-pass
//! (centered) form; the uncentered `E[X²] − E[X]²` form is only used as a
//! test oracle.

use crate::error::{Error, Result};
use crate::sample::WeightedSample;
use crate::sum::{compensated_sum, CompensatedSum};

/// `Σ α_i x_i`.
pub fn arithmetic_mean(ws: &WeightedSample) -> f64 {
    compensated_sum(ws.iter().map(|(a, x)| a * x))
}

/// `Π x_i^{α_i}`, evaluated in the log domain relative to the largest value.
///
/// Returns exactly `0.0` when any value is zero; logs are never taken of zero.
pub fn geometric_mean(ws: &WeightedSample) -> f64 {
    if ws.values().contains(&0.0) {
        return 0.0;
    }
    let max = ws.max_value();
    let log_ratio = compensated_sum(ws.iter().map(|(a, x)| a * (x / max).ln()));
    max * log_ratio.exp()
}

/// `AM − GM`, evaluated without subtracting the two means.
///
/// With `c = max x` and `u_i = x_i/c − 1 ∈ [−1, 0]`,
///
/// ```text
/// AM − GM = c · (Σ α_i u_i − expm1(Σ α_i log1p(u_i)))
/// ```
///
/// The two sums agree to first order in the spread of the values, so the
/// rounding error of the result is proportional to that spread rather than to
/// the mean. This keeps the gap relatively accurate near equality, where
/// `AM − GM` would cancel catastrophically.
pub fn amgm_gap(ws: &WeightedSample) -> f64 {
    if ws.values().contains(&0.0) {
        return arithmetic_mean(ws);
    }
    let c = ws.max_value();
    let mut total_weight = CompensatedSum::new();
    let mut linear = CompensatedSum::new();
    let mut log = CompensatedSum::new();
    for (a, x) in ws.iter() {
        let u = (x - c) / c;
        total_weight += a;
        linear += a * u;
        log += a * u.ln_1p();
    }
    let w = total_weight.value();
    (c * (linear.value() / w - (log.value() / w).exp_m1())).max(0.0)
}

/// `(Σ α_i x_i^s)^{1/s}` for `s > 0`.
///
/// Values are divided by the maximum before exponentiation so neither large
/// `s` nor extreme magnitudes overflow.
pub fn power_mean(ws: &WeightedSample, s: f64) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::parameter(
            "s",
            format!("must be finite and > 0, got {s}"),
        ));
    }
    if s == 1.0 {
        return Ok(arithmetic_mean(ws));
    }
    let max = ws.max_value();
    if max == 0.0 {
        return Ok(0.0);
    }
    let inner = if s == 0.5 {
        let m = compensated_sum(ws.iter().map(|(a, x)| a * (x / max).sqrt()));
        m * m
    } else {
        compensated_sum(ws.iter().map(|(a, x)| a * (x / max).powf(s))).powf(s.recip())
    };
    Ok(max * inner)
}

/// `Var(x^{1/2}) = Σ α_i (√x_i − Σ_k α_k √x_k)²`.
pub fn sqrt_variance(ws: &WeightedSample) -> f64 {
    centered_variance(ws, f64::sqrt)
}

/// `Var(x) = Σ α_i (x_i − Σ_k α_k x_k)²`.
pub fn variance(ws: &WeightedSample) -> f64 {
    centered_variance(ws, |x| x)
}

/// Corrected two-pass variance of `map(x)` under the weights.
fn centered_variance(ws: &WeightedSample, map: impl Fn(f64) -> f64) -> f64 {
    let mut total_weight = CompensatedSum::new();
    let mut mean = CompensatedSum::new();
    for (a, x) in ws.iter() {
        total_weight += a;
        mean += a * map(x);
    }
    let total_weight = total_weight.value();
    let mean = mean.value() / total_weight;

    let mut sq = CompensatedSum::new();
    let mut lin = CompensatedSum::new();
    for (a, x) in ws.iter() {
        let d = map(x) - mean;
        sq += a * d * d;
        lin += a * d;
    }
    let lin = lin.value();
    (sq.value() / total_weight - (lin / total_weight).powi(2)).max(0.0)
}
