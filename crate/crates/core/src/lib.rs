//! Weighted means and the variance-refined AM-GM inequality.
//!
//! For probability weights `α` and nonnegative values `x`,
//!
//! ```text
//! Π x_i^{α_i} ≤ Σ α_i x_i − Var(x^{1/2}) ≤ Σ α_i x_i
//! ```
//!
//! where `Var(x^{1/2})` is the variance of the square roots under the weights.
//! The crate provides:
//!
//! - [`means`]: compensated weighted means, power means and variances;
//! - [`bounds`]: the refined upper bound, the Cartwright–Field sandwich and
//!   a chain-verification report;
//! - [`holder`]: the corresponding refinement of Hölder's inequality for
//!   functions on a discrete measure, including the two-function angle view;
//! - [`search`]: a multi-start pattern search for large values of
//!   `(AM − GM) / Var(x^{1/2})` under a minimum-weight floor;
//! - [`cli`]: the `amgm` command-line driver.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod holder;
pub mod means;
pub mod sample;
pub mod search;
pub mod sum;

#[cfg(test)]
mod testing;

pub use bounds::{
    cartwright_field_bounds, refined_amgm_upper, verify_chain, BoundReport, CartwrightField,
};
pub use error::{Error, Result};
pub use holder::{
    angular_distance, holder_correction, lp_norm, product_l1, refined_holder,
    two_function_correction, DiscretizedFunction, ExponentTuple, HolderReport, Quadrature,
};
pub use means::{amgm_gap, arithmetic_mean, geometric_mean, power_mean, sqrt_variance, variance};
pub use sample::{Tolerance, WeightedSample};
pub use search::{
    canonical_counterexamples, gap_variance_ratio, maximize_ratio, ratio_vs_delta_table,
    Counterexample, Family, SearchConfig, SearchResult,
};
