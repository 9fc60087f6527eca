//! Shared proptest strategies and comparison helpers for unit tests.

use std::ops::Range;

use proptest::prelude::*;

use crate::sample::WeightedSample;

/// `|a − b| ≤ tol · max(|a|, |b|)`; two exact zeros compare equal.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}

fn normalize(raw: Vec<f64>) -> Vec<f64> {
    let total: f64 = crate::sum::compensated_sum(raw.iter().copied());
    raw.into_iter().map(|w| w / total).collect()
}

/// Valid samples with values in `[0, 10]`; roughly one value in eight is an
/// exact zero.
pub fn arb_sample(len: Range<usize>) -> impl Strategy<Value = WeightedSample> {
    len.prop_flat_map(|n| {
        let value = prop_oneof![1 => Just(0.0), 7 => 0.0f64..=10.0];
        (
            prop::collection::vec(0.01f64..1.0, n),
            prop::collection::vec(value, n),
        )
    })
    .prop_map(|(w, v)| WeightedSample::new(normalize(w), v).unwrap())
}

/// Valid samples whose values are all strictly positive.
pub fn arb_positive_sample(len: Range<usize>) -> impl Strategy<Value = WeightedSample> {
    len.prop_flat_map(|n| {
        (
            prop::collection::vec(0.01f64..1.0, n),
            prop::collection::vec(0.01f64..=10.0, n),
        )
    })
    .prop_map(|(w, v)| WeightedSample::new(normalize(w), v).unwrap())
}
