//! The variance-refined AM-GM upper bound, the Cartwright–Field sandwich,
//! and a report that checks the whole chain for one sample.
//!
//! For a sample `(α, x)` the chain is
//!
//! ```text
//! GM ≤ AM − Var(x^{1/2}) ≤ AM
//! Var(x)/(2M) ≤ AM − GM ≤ Var(x)/(2m)      (m = min x > 0, M = max x)
//! ```
//!
//! `AM − Var(x^{1/2})` equals the power mean of order 1/2 algebraically. It is
//! deliberately computed by subtraction here so that
//! [`power_mean`](crate::means::power_mean) remains an independent check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::means::{
    amgm_gap, arithmetic_mean, geometric_mean, power_mean, sqrt_variance, variance,
};
use crate::sample::{Tolerance, WeightedSample};

/// `AM − Var(x^{1/2})`, an upper bound for the geometric mean.
pub fn refined_amgm_upper(ws: &WeightedSample) -> f64 {
    arithmetic_mean(ws) - sqrt_variance(ws)
}

/// Lower and upper Cartwright–Field bounds on `AM − GM`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartwrightField {
    pub lower: f64,
    pub upper: f64,
}

/// `(Var(x)/(2M), Var(x)/(2m))`; requires every value to be strictly positive.
pub fn cartwright_field_bounds(ws: &WeightedSample) -> Result<CartwrightField> {
    let m = ws.min_value();
    if m <= 0.0 {
        return Err(Error::domain(
            "Cartwright–Field upper bound undefined for zero values",
        ));
    }
    let big_m = ws.max_value();
    let var = variance(ws);
    Ok(CartwrightField {
        lower: var / (2.0 * big_m),
        upper: var / (2.0 * m),
    })
}

/// Every quantity in the refined AM-GM chain for one sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub am: f64,
    pub gm: f64,
    pub power_mean_half: f64,
    pub sqrt_var: f64,
    pub refined_upper: f64,
    pub cf_lower: Option<f64>,
    pub cf_upper: Option<f64>,
    pub gap: f64,
    pub chain_ok: bool,
    pub tolerance_used: Tolerance,
}

/// Evaluates the chain and records whether every inequality holds within `tol`.
///
/// The slack is relative to the arithmetic mean. Cartwright–Field fields are
/// `None` when some value is zero.
pub fn verify_chain(ws: &WeightedSample, tol: Tolerance) -> BoundReport {
    let am = arithmetic_mean(ws);
    let gm = geometric_mean(ws);
    let sqrt_var = sqrt_variance(ws);
    let refined_upper = am - sqrt_var;
    let power_mean_half = power_mean(ws, 0.5).expect("1/2 is a valid exponent");
    let gap = amgm_gap(ws);
    let cf = cartwright_field_bounds(ws).ok();

    let mut chain_ok =
        tol.le(0.0, gap, am) && tol.le(gm, refined_upper, am) && tol.le(refined_upper, am, am);
    if let Some(cf) = cf {
        chain_ok &= tol.le(cf.lower, gap, am) && tol.le(gap, cf.upper, am);
    }

    BoundReport {
        am,
        gm,
        power_mean_half,
        sqrt_var,
        refined_upper,
        cf_lower: cf.map(|c| c.lower),
        cf_upper: cf.map(|c| c.upper),
        gap,
        chain_ok,
        tolerance_used: tol,
    }
}
