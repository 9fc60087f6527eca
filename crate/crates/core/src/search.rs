//! Empirical search for large values of `(AM − GM) / Var(x^{1/2})`.
//!
//! The ratio is at least 1 for every sample, but it is unbounded in general:
//! it grows like `n` for equal weights on `(0, 1, …, 1)` and like `1/α` for
//! weights `(α, 1 − α)` on `(0, 1)`. The open question is whether it can be
//! bounded by a function of the smallest weight. [`maximize_ratio`] probes
//! that question with a multi-start pattern search over samples whose weights
//! all stay above a floor `delta`.
//!
//! # Parametrization
//!
//! A point of the search space is a pair of unconstrained vectors `(w, v)`:
//!
//! * weights `α = δ + (1 − nδ)·softmax(w)`, so `α_i ≥ δ` and `Σ α_i = 1`;
//! * values `x_i = exp(v_i − max v)`, so the largest value is exactly 1, with
//!   `x_i` snapped to exactly 0 once `v_i` falls [`ZERO_GAP`] below the max.
//!
//! Both ratio terms are 1-homogeneous in `x`, so pinning the maximum loses
//! nothing. Every iterate is feasible by construction.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::means::{amgm_gap, arithmetic_mean, sqrt_variance};
use crate::sample::WeightedSample;

/// Log-gap below the maximum at which a value becomes exactly zero.
pub const ZERO_GAP: f64 = 40.0;

/// Log-gap that drives a softmax share to (numerically) nothing.
const FLOOR_GAP: f64 = 60.0;

/// Candidates whose `Var(x^{1/2})` falls below this fraction of the
/// arithmetic mean are rejected: the gap is then dominated by rounding.
pub const DEGENERATE_RELATIVE_VARIANCE: f64 = 1e-9;

/// Consecutive unsuccessful polls (each halving the step) before a restart
/// is declared converged.
const MAX_HALVINGS: usize = 48;

/// `(AM − GM) / Var(x^{1/2})`.
///
/// Always at least 1 up to rounding. Undefined when all values coincide.
pub fn gap_variance_ratio(ws: &WeightedSample) -> Result<f64> {
    let var = sqrt_variance(ws);
    if ws.max_value() == ws.min_value() || var < 1e-300 {
        return Err(Error::domain("ratio undefined at equality point"));
    }
    Ok(amgm_gap(ws) / var)
}

/// The two analytic families showing the ratio is unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Equal weights `1/n` on `(0, 1, …, 1)`; ratio `n`.
    EqualWeights,
    /// Weights `(α, 1 − α)` on `(0, 1)`; ratio `1/α`.
    SkewedPair,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub family: Family,
    pub sample: WeightedSample,
    pub predicted_ratio: f64,
}

/// Both families: equal weights at size `n`, and the skewed pair at `alpha`.
pub fn canonical_counterexamples(n: usize, alpha: f64) -> Result<Vec<Counterexample>> {
    if n < 2 {
        return Err(Error::parameter("n", format!("must be >= 2, got {n}")));
    }
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(Error::parameter(
            "alpha",
            format!("must lie in (0, 1/2), got {alpha}"),
        ));
    }
    let mut values = vec![1.0; n];
    values[0] = 0.0;
    Ok(vec![
        Counterexample {
            family: Family::EqualWeights,
            sample: WeightedSample::uniform(values)?,
            predicted_ratio: n as f64,
        },
        Counterexample {
            family: Family::SkewedPair,
            sample: WeightedSample::new(vec![alpha, 1.0 - alpha], vec![0.0, 1.0])?,
            predicted_ratio: 1.0 / alpha,
        },
    ])
}

/// Parameters of one [`maximize_ratio`] run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    /// Minimum admissible weight; `0 < delta ≤ 1/n`.
    pub delta: f64,
    pub restarts: usize,
    /// Polls per restart.
    pub iterations: usize,
    pub seed: u64,
    /// Initial pattern step in parameter space.
    pub step_scale: f64,
}

impl SearchConfig {
    pub fn new(n: usize, delta: f64) -> Self {
        Self {
            n,
            delta,
            restarts: 8,
            iterations: 200,
            seed: 0,
            step_scale: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::parameter(
                "n",
                format!("must be >= 2, got {}", self.n),
            ));
        }
        if !(self.delta.is_finite() && self.delta > 0.0) {
            return Err(Error::parameter(
                "delta",
                format!("must be positive and finite, got {}", self.delta),
            ));
        }
        if self.delta * self.n as f64 > 1.0 + 1e-12 {
            return Err(Error::parameter(
                "delta",
                format!(
                    "must be at most 1/n = {}, got {}",
                    1.0 / self.n as f64,
                    self.delta
                ),
            ));
        }
        if self.restarts == 0 {
            return Err(Error::parameter("restarts", "must be >= 1"));
        }
        if self.iterations == 0 {
            return Err(Error::parameter("iterations", "must be >= 1"));
        }
        if !(self.step_scale.is_finite() && self.step_scale > 0.0) {
            return Err(Error::parameter(
                "step_scale",
                format!("must be positive and finite, got {}", self.step_scale),
            ));
        }
        Ok(())
    }
}

/// Outcome of [`maximize_ratio`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    #[serde(with = "ratio_serde")]
    pub best_ratio: f64,
    pub best_sample: WeightedSample,
    /// Best ratio of each restart; `-inf` if a restart never found a feasible point.
    #[serde(with = "ratios_serde")]
    pub restart_ratios: Vec<f64>,
    pub evaluations: u64,
    /// Best-so-far ratio after every poll, per restart.
    #[serde(default, skip_serializing_if = "Vec::is_empty", with = "traces_serde")]
    pub traces: Vec<Vec<f64>>,
}

/// Sample with weight `delta` on a single zero and the remaining mass spread
/// evenly over ones. Its ratio is `1/delta`, the best of the analytic
/// families that respects the weight floor.
pub fn floor_seed(n: usize, delta: f64) -> Result<(WeightedSample, f64)> {
    SearchConfig::new(n, delta).validate()?;
    let rest = (1.0 - delta) / (n - 1) as f64;
    let mut weights = vec![rest; n];
    weights[0] = delta;
    let mut values = vec![1.0; n];
    values[0] = 0.0;
    Ok((WeightedSample::renormalized(weights, values)?, 1.0 / delta))
}

#[derive(Debug, Clone)]
struct Point {
    params: Vec<f64>,
    sample: WeightedSample,
    ratio: f64,
}

struct Space {
    n: usize,
    delta: f64,
    free_mass: f64,
}

impl Space {
    fn new(cfg: &SearchConfig) -> Self {
        Self {
            n: cfg.n,
            delta: cfg.delta,
            free_mass: (1.0 - cfg.n as f64 * cfg.delta).max(0.0),
        }
    }

    fn decode(&self, params: &[f64]) -> Option<WeightedSample> {
        let (w, v) = params.split_at(self.n);
        let w_top = w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let exps: Vec<f64> = w.iter().map(|x| (x - w_top).exp()).collect();
        let total: f64 = exps.iter().sum();
        let weights = exps
            .iter()
            .map(|e| self.delta + self.free_mass * (e / total))
            .collect();

        let v_top = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let values = v
            .iter()
            .map(|x| {
                let gap = x - v_top;
                if gap <= -ZERO_GAP {
                    0.0
                } else {
                    gap.exp()
                }
            })
            .collect();
        WeightedSample::new(weights, values).ok()
    }

    fn evaluate(&self, params: Vec<f64>) -> Option<Point> {
        let sample = self.decode(&params)?;
        let am = arithmetic_mean(&sample);
        let var = sqrt_variance(&sample);
        if var.is_nan() || var <= DEGENERATE_RELATIVE_VARIANCE * am {
            return None;
        }
        let ratio = amgm_gap(&sample) / var;
        ratio.is_finite().then_some(Point {
            params,
            sample,
            ratio,
        })
    }

    fn seed_params(&self) -> Vec<f64> {
        let mut params = vec![0.0; 2 * self.n];
        params[0] = -FLOOR_GAP;
        params[self.n] = -(ZERO_GAP + 1.0);
        params
    }

    fn random_params(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let mut params = Vec::with_capacity(2 * self.n);
        for _ in 0..self.n {
            params.push(rng.random_range(-3.0..3.0));
        }
        for _ in 0..self.n {
            if rng.random_bool(0.25) {
                params.push(-(ZERO_GAP + 1.0));
            } else {
                params.push(rng.random_range(-8.0..0.0));
            }
        }
        params
    }

    /// Coordinate moves `±step`, followed by boundary snaps: each value to
    /// zero or to the maximum, and each weight to the floor.
    fn poll(&self, params: &[f64], step: f64) -> Vec<Vec<f64>> {
        let n = self.n;
        let mut out = Vec::with_capacity(7 * n);
        for k in 0..2 * n {
            for dir in [step, -step] {
                let mut p = params.to_vec();
                p[k] += dir;
                out.push(p);
            }
        }
        let v_top = params[n..]
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        let w_low = params[..n].iter().copied().fold(f64::INFINITY, f64::min);
        for k in 0..n {
            let mut zero = params.to_vec();
            zero[n + k] = v_top - ZERO_GAP - 1.0;
            out.push(zero);
            let mut one = params.to_vec();
            one[n + k] = v_top;
            out.push(one);
            let mut floor = params.to_vec();
            floor[k] = w_low - FLOOR_GAP;
            out.push(floor);
        }
        out
    }
}

/// Strict "better than" with the lexicographic tie-break on `(weights, values)`.
fn better(a: &Point, b: &Point) -> bool {
    match a.ratio.total_cmp(&b.ratio) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => lexicographic(&a.sample, &b.sample) == Ordering::Less,
    }
}

fn lexicographic(a: &WeightedSample, b: &WeightedSample) -> Ordering {
    let cmp = |x: &[f64], y: &[f64]| {
        x.iter()
            .zip(y)
            .map(|(p, q)| p.total_cmp(q))
            .find(|o| o.is_ne())
            .unwrap_or_else(|| x.len().cmp(&y.len()))
    };
    cmp(a.weights(), b.weights()).then_with(|| cmp(a.values(), b.values()))
}

struct RestartOutcome {
    best: Option<Point>,
    trace: Vec<f64>,
    evaluations: u64,
}

fn run_restart(space: &Space, cfg: &SearchConfig, index: usize) -> RestartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
    let mut evaluations = 0u64;

    let mut current = None;
    if index == 0 {
        evaluations += 1;
        current = space.evaluate(space.seed_params());
    }
    // Draw starting points until one is feasible; bounded so a pathological
    // configuration cannot spin forever.
    for _ in 0..64 {
        if current.is_some() {
            break;
        }
        evaluations += 1;
        current = space.evaluate(space.random_params(&mut rng));
    }

    let mut trace = Vec::with_capacity(cfg.iterations);
    let Some(mut current) = current else {
        trace.resize(cfg.iterations, f64::NEG_INFINITY);
        return RestartOutcome {
            best: None,
            trace,
            evaluations,
        };
    };

    let mut step = cfg.step_scale;
    let mut failures = 0;
    for _ in 0..cfg.iterations {
        if failures < MAX_HALVINGS {
            let mut best_move: Option<Point> = None;
            for candidate in space.poll(&current.params, step) {
                evaluations += 1;
                if let Some(point) = space.evaluate(candidate) {
                    if best_move.as_ref().is_none_or(|b| better(&point, b)) {
                        best_move = Some(point);
                    }
                }
            }
            match best_move {
                Some(point) if point.ratio > current.ratio => {
                    current = point;
                    failures = 0;
                }
                _ => {
                    step *= 0.5;
                    failures += 1;
                }
            }
        }
        trace.push(current.ratio);
    }

    RestartOutcome {
        best: Some(current),
        trace,
        evaluations,
    }
}

/// Multi-start pattern search for the largest ratio with every weight at
/// least `config.delta`.
///
/// Restart 0 starts from [`floor_seed`]; restart `r > 0` starts from a point
/// drawn from a generator seeded with `seed + r`. Restarts run in parallel
/// and the result does not depend on the number of threads.
pub fn maximize_ratio(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let space = Space::new(config);
    let outcomes: Vec<RestartOutcome> = (0..config.restarts)
        .into_par_iter()
        .map(|r| run_restart(&space, config, r))
        .collect();

    let mut best: Option<&Point> = None;
    for point in outcomes.iter().filter_map(|o| o.best.as_ref()) {
        if best.is_none_or(|b| better(point, b)) {
            best = Some(point);
        }
    }
    let (best_ratio, best_sample) = match best {
        Some(p) => (p.ratio, p.sample.clone()),
        None => (f64::NEG_INFINITY, floor_seed(config.n, config.delta)?.0),
    };

    Ok(SearchResult {
        best_ratio,
        best_sample,
        restart_ratios: outcomes
            .iter()
            .map(|o| o.best.as_ref().map_or(f64::NEG_INFINITY, |p| p.ratio))
            .collect(),
        evaluations: outcomes.iter().map(|o| o.evaluations).sum(),
        traces: outcomes.into_iter().map(|o| o.trace).collect(),
    })
}

/// Best ratio found for each weight floor in `deltas`, searching at size `n`
/// with the remaining settings taken from `per_point`.
pub fn ratio_vs_delta_table(
    n: usize,
    deltas: &[f64],
    per_point: &SearchConfig,
) -> Result<Vec<(f64, f64)>> {
    let configs: Vec<SearchConfig> = deltas
        .iter()
        .map(|&delta| SearchConfig {
            n,
            delta,
            ..*per_point
        })
        .collect();
    for cfg in &configs {
        cfg.validate()?;
    }
    configs
        .iter()
        .map(|cfg| Ok((cfg.delta, maximize_ratio(cfg)?.best_ratio)))
        .collect()
}

// JSON has no infinities; the -inf sentinel travels as null.
mod ratio_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        x.is_finite().then_some(*x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NEG_INFINITY))
    }
}

mod ratios_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Option<f64>> = xs.iter().map(|x| x.is_finite().then_some(*x)).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        Ok(Vec::<Option<f64>>::deserialize(d)?
            .into_iter()
            .map(|x| x.unwrap_or(f64::NEG_INFINITY))
            .collect())
    }
}

mod traces_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Vec<f64>], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<Option<f64>>> = xs
            .iter()
            .map(|t| t.iter().map(|x| x.is_finite().then_some(*x)).collect())
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<f64>>, D::Error> {
        Ok(Vec::<Vec<Option<f64>>>::deserialize(d)?
            .into_iter()
            .map(|t| {
                t.into_iter()
                    .map(|x| x.unwrap_or(f64::NEG_INFINITY))
                    .collect()
            })
            .collect())
    }
}
