#![allow(dead_code)]

use amgm::{DiscretizedFunction, ExponentTuple, Quadrature, WeightedSample};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Relative comparison for quantities confined to `[0, 1]`, where an exact
/// zero on one side makes a purely relative test meaningless.
pub fn unit_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-3)
}

pub fn normalized(raw: Vec<f64>) -> Vec<f64> {
    let total = amgm::sum::compensated_sum(raw.iter().copied());
    raw.into_iter().map(|w| w / total).collect()
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    normalized((0..n).map(|_| rng.random_range(0.01..1.0)).collect())
}

/// `n ∈ [2, 10]`, values in `[0, 10]`; with probability `zero_rate` between
/// one and `n − 1` values are forced to exactly zero.
pub fn random_sample(rng: &mut ChaCha8Rng, zero_rate: f64) -> WeightedSample {
    let n = rng.random_range(2..=10);
    let weights = random_weights(rng, n);
    let mut values: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..=10.0)).collect();
    if rng.random_bool(zero_rate) {
        let zeros = rng.random_range(1..n);
        for _ in 0..zeros {
            let i = rng.random_range(0..n);
            values[i] = 0.0;
        }
    }
    WeightedSample::new(weights, values).unwrap()
}

pub fn random_positive_sample(rng: &mut ChaCha8Rng) -> WeightedSample {
    let n = rng.random_range(2..=10);
    let weights = random_weights(rng, n);
    let values = (0..n).map(|_| rng.random_range(1e-3..=10.0)).collect();
    WeightedSample::new(weights, values).unwrap()
}

/// `n` conjugate exponents from random reciprocals.
pub fn random_exponents(rng: &mut ChaCha8Rng, n: usize) -> ExponentTuple {
    let r = normalized((0..n).map(|_| rng.random_range(0.05..1.0)).collect());
    ExponentTuple::new(r.into_iter().map(f64::recip).collect()).unwrap()
}

pub fn random_quadrature(rng: &mut ChaCha8Rng, len: usize) -> Quadrature {
    Quadrature::new((0..len).map(|_| rng.random_range(0.01..1.0)).collect()).unwrap()
}

/// A nonnegative function with at least one positive sample.
pub fn random_function(rng: &mut ChaCha8Rng, q: &Quadrature) -> DiscretizedFunction {
    let mut values: Vec<f64> = (0..q.len())
        .map(|_| {
            if rng.random_bool(0.1) {
                0.0
            } else {
                rng.random_range(0.0..5.0)
            }
        })
        .collect();
    if values.iter().all(|&v| v == 0.0) {
        values[0] = 1.0;
    }
    DiscretizedFunction::new(values, q.clone()).unwrap()
}

pub fn random_holder_instance(rng: &mut ChaCha8Rng) -> (Vec<DiscretizedFunction>, ExponentTuple) {
    let n = rng.random_range(2..=5);
    let len = rng.random_range(1..=64);
    let q = random_quadrature(rng, len);
    let fs = (0..n).map(|_| random_function(rng, &q)).collect();
    (fs, random_exponents(rng, n))
}
