//! Validated input types shared by every mean and bound computation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::compensated_sum;

/// Maximum admissible `|Σ α_i − 1|` for a [`WeightedSample`].
pub const WEIGHT_TOLERANCE: f64 = 1e-12;

/// Largest normalization defect that [`WeightedSample::renormalized`] will
/// silently rescale away. Anything beyond this is treated as bad data.
pub const RENORMALIZE_LIMIT: f64 = 1e-6;

/// A finite probability measure `Σ α_i δ_{x_i}` on nonnegative reals.
///
/// Construction enforces equal lengths `n ≥ 1`, finite strictly positive
/// weights summing to one within [`WEIGHT_TOLERANCE`], and finite
/// nonnegative values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightedSample {
    weights: Vec<f64>,
    values: Vec<f64>,
}

impl WeightedSample {
    pub fn new(weights: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        check_shape_and_entries(&weights, &values)?;
        let total = compensated_sum(weights.iter().copied());
        if (total - 1.0).abs() > WEIGHT_TOLERANCE {
            return Err(Error::validation(format!(
                "weights must sum to 1 within {WEIGHT_TOLERANCE:e} (sum is {total:.17})"
            )));
        }
        Ok(Self { weights, values })
    }

    /// Builds a sample after rescaling the weights to sum exactly to one.
    ///
    /// Refuses when the weights are off by more than [`RENORMALIZE_LIMIT`].
    pub fn renormalized(mut weights: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        check_shape_and_entries(&weights, &values)?;
        let total = compensated_sum(weights.iter().copied());
        if (total - 1.0).abs() > RENORMALIZE_LIMIT {
            return Err(Error::validation(format!(
                "weights sum to {total:.17}, too far from 1 to renormalize \
                 (limit {RENORMALIZE_LIMIT:e})"
            )));
        }
        for w in &mut weights {
            *w /= total;
        }
        Self::new(weights, values)
    }

    /// Equal weights `1/n` on the given values.
    pub fn uniform(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::validation("sample must contain at least one point"));
        }
        let n = values.len();
        Self::new(vec![1.0 / n as f64; n], values)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.weights
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_value(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min_weight(&self) -> f64 {
        self.weights.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// The same measure with every value multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::parameter(
                "c",
                format!("must be finite and > 0, got {c}"),
            ));
        }
        let values = self.values.iter().map(|x| c * x).collect();
        Self::new(self.weights.clone(), values)
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.weights, self.values)
    }
}

fn check_shape_and_entries(weights: &[f64], values: &[f64]) -> Result<()> {
    if weights.len() != values.len() {
        return Err(Error::validation(format!(
            "weights and values must have equal length ({} vs {})",
            weights.len(),
            values.len()
        )));
    }
    if values.is_empty() {
        return Err(Error::validation("sample must contain at least one point"));
    }
    for (i, &w) in weights.iter().enumerate() {
        if !w.is_finite() {
            return Err(Error::validation(format!(
                "weights must be finite (weight[{i}] = {w})"
            )));
        }
        if w <= 0.0 {
            return Err(Error::validation(format!(
                "weights must be strictly positive (weight[{i}] = {w})"
            )));
        }
    }
    for (i, &x) in values.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::validation(format!(
                "values must be finite (value[{i}] = {x})"
            )));
        }
        if x < 0.0 {
            return Err(Error::validation(format!(
                "values must be nonnegative (value[{i}] = {x})"
            )));
        }
    }
    Ok(())
}

impl<'de> Deserialize<'de> for WeightedSample {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            weights: Vec<f64>,
            values: Vec<f64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        WeightedSample::new(raw.weights, raw.values).map_err(serde::de::Error::custom)
    }
}

/// Slack allowed when comparing quantities that should be ordered.
///
/// The effective slack at scale `s` is `relative · s + absolute`, except that
/// scales below `1e-300` use `absolute` alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub relative: f64,
    pub absolute: f64,
}

impl Tolerance {
    pub const DEFAULT_RELATIVE: f64 = 1e-9;

    pub fn new(relative: f64, absolute: f64) -> Result<Self> {
        if !(relative.is_finite() && relative > 0.0) {
            return Err(Error::parameter(
                "relative",
                format!("must be finite and > 0, got {relative}"),
            ));
        }
        if !(absolute.is_finite() && absolute >= 0.0) {
            return Err(Error::parameter(
                "absolute",
                format!("must be finite and >= 0, got {absolute}"),
            ));
        }
        Ok(Self { relative, absolute })
    }

    pub fn slack(&self, scale: f64) -> f64 {
        let scale = scale.abs();
        if scale < 1e-300 {
            self.absolute
        } else {
            self.relative * scale + self.absolute
        }
    }

    /// `lhs ≤ rhs` up to the slack at `scale`.
    pub fn le(&self, lhs: f64, rhs: f64, scale: f64) -> bool {
        lhs <= rhs + self.slack(scale)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            relative: Self::DEFAULT_RELATIVE,
            absolute: 0.0,
        }
    }
}
