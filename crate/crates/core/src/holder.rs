//! Refined Hölder inequality for nonnegative functions on a discrete measure.
//!
//! Each `f_i` is normalized into a unit vector of the quadrature 2-norm,
//! `g_i = (f_i / ‖f_i‖_{p_i})^{p_i/2}`. The correction term is the weighted
//! dispersion of the `g_i` around `ḡ = Σ_k g_k / p_k`:
//!
//! ```text
//! ‖Π f_i‖_1 ≤ Π ‖f_i‖_{p_i} · (1 − Σ_i ‖g_i − ḡ‖_2² / p_i)
//! ```
//!
//! and the correction equals `1 − ‖ḡ‖_2²`. For two functions it depends only on
//! the angle between `g_1` and `g_2`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sample::Tolerance;
use crate::sum::compensated_sum;

/// Maximum admissible `|Σ 1/p_i − 1|` for an [`ExponentTuple`].
pub const CONJUGACY_TOLERANCE: f64 = 1e-12;

/// Positive quadrature weights defining the discrete measure.
///
/// Clones share storage. Two grids are compatible only when their weights are
/// bitwise identical.
#[derive(Debug, Clone)]
pub struct Quadrature(Arc<[f64]>);

impl Quadrature {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::validation(
                "quadrature must contain at least one node",
            ));
        }
        for (j, &w) in weights.iter().enumerate() {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::validation(format!(
                    "quadrature weights must be finite and strictly positive (weight[{j}] = {w})"
                )));
            }
        }
        Ok(Self(weights.into()))
    }

    /// `n` nodes on `[0, 1]` with weight `1/n` each.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::validation(
                "quadrature must contain at least one node",
            ));
        }
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn weights(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn same_grid(&self, other: &Quadrature) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.len() == other.len()
                && self
                    .0
                    .iter()
                    .zip(other.0.iter())
                    .all(|(a, b)| a.to_bits() == b.to_bits()))
    }

    fn dot(&self, a: &[f64], b: &[f64]) -> f64 {
        compensated_sum(
            self.0
                .iter()
                .zip(a.iter().zip(b))
                .map(|(w, (x, y))| w * x * y),
        )
    }
}

impl PartialEq for Quadrature {
    fn eq(&self, other: &Self) -> bool {
        self.same_grid(other)
    }
}

/// Sampled values of a nonnegative function on a quadrature grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedFunction {
    values: Vec<f64>,
    quadrature: Quadrature,
}

impl DiscretizedFunction {
    pub fn new(values: Vec<f64>, quadrature: Quadrature) -> Result<Self> {
        if values.len() != quadrature.len() {
            return Err(Error::validation(format!(
                "function has {} samples but the quadrature has {} nodes",
                values.len(),
                quadrature.len()
            )));
        }
        for (j, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::validation(format!(
                    "function values must be finite (value[{j}] = {v})"
                )));
            }
            if v < 0.0 {
                return Err(Error::validation(format!(
                    "function values must be nonnegative (value[{j}] = {v})"
                )));
            }
        }
        Ok(Self { values, quadrature })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn quadrature(&self) -> &Quadrature {
        &self.quadrature
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Conjugate exponents `p_1..p_n`, each in `(1, ∞)`, with `Σ 1/p_i = 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ExponentTuple(Vec<f64>);

impl ExponentTuple {
    pub fn new(exponents: Vec<f64>) -> Result<Self> {
        if exponents.len() < 2 {
            return Err(Error::parameter(
                "exponents",
                format!("need at least two exponents, got {}", exponents.len()),
            ));
        }
        for (i, &p) in exponents.iter().enumerate() {
            if !(p.is_finite() && p > 1.0) {
                return Err(Error::parameter(
                    "exponents",
                    format!("each exponent must lie in (1, inf) (p[{i}] = {p})"),
                ));
            }
        }
        let total = compensated_sum(exponents.iter().map(|p| p.recip()));
        if (total - 1.0).abs() > CONJUGACY_TOLERANCE {
            return Err(Error::parameter(
                "exponents",
                format!(
                    "exponents are not conjugate: sum of reciprocals is {total:.17}, expected 1 \
                     within {CONJUGACY_TOLERANCE:e}"
                ),
            ));
        }
        Ok(Self(exponents))
    }

    /// `(p, p/(p − 1))`.
    pub fn conjugate_pair(p: f64) -> Result<Self> {
        Self::new(vec![p, p / (p - 1.0)])
    }

    pub fn exponents(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<f64>> for ExponentTuple {
    type Error = Error;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Self::new(value)
    }
}

impl From<ExponentTuple> for Vec<f64> {
    fn from(value: ExponentTuple) -> Self {
        value.0
    }
}

/// Quantities of the refined Hölder inequality for one family of functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HolderReport {
    pub product_l1: f64,
    pub classical_bound: f64,
    pub correction: f64,
    pub refined_bound: f64,
    pub norms: Vec<f64>,
    pub mean_unit_vector_norm_sq: f64,
    pub chain_ok: bool,
    pub tolerance_used: Tolerance,
}

/// `(Σ_j w_j f_j^p)^{1/p}` for `p ≥ 1`.
pub fn lp_norm(f: &DiscretizedFunction, p: f64) -> Result<f64> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::parameter(
            "p",
            format!("must be finite and >= 1, got {p}"),
        ));
    }
    let w = f.quadrature.weights();
    if p == 1.0 {
        return Ok(compensated_sum(w.iter().zip(&f.values).map(|(w, x)| w * x)));
    }
    let max = f.values.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return Ok(0.0);
    }
    let inner = compensated_sum(w.iter().zip(&f.values).map(|(w, x)| w * (x / max).powf(p)));
    Ok(max * inner.powf(p.recip()))
}

fn common_grid(fs: &[DiscretizedFunction]) -> Result<&Quadrature> {
    let first = fs
        .first()
        .ok_or_else(|| Error::validation("need at least one function"))?;
    for (i, f) in fs.iter().enumerate().skip(1) {
        if !f.quadrature.same_grid(&first.quadrature) {
            return Err(Error::Grid(format!(
                "function {i} is not sampled on the same quadrature as function 0"
            )));
        }
    }
    Ok(&first.quadrature)
}

/// `‖Π f_i‖_1 = Σ_j w_j Π_i f_i(u_j)`.
pub fn product_l1(fs: &[DiscretizedFunction]) -> Result<f64> {
    let grid = common_grid(fs)?;
    Ok(compensated_sum(grid.weights().iter().enumerate().map(
        |(j, w)| w * fs.iter().map(|f| f.values[j]).product::<f64>(),
    )))
}

/// The normalized functions `g_i` together with their norms.
struct UnitVectors<'a> {
    grid: &'a Quadrature,
    norms: Vec<f64>,
    units: Vec<Vec<f64>>,
}

impl<'a> UnitVectors<'a> {
    fn build(fs: &'a [DiscretizedFunction], ps: &ExponentTuple) -> Result<Self> {
        if fs.len() != ps.len() {
            return Err(Error::validation(format!(
                "{} functions but {} exponents",
                fs.len(),
                ps.len()
            )));
        }
        let grid = common_grid(fs)?;
        let mut norms = Vec::with_capacity(fs.len());
        let mut units = Vec::with_capacity(fs.len());
        for (i, (f, &p)) in fs.iter().zip(ps.exponents()).enumerate() {
            let norm = lp_norm(f, p)?;
            if norm <= 0.0 {
                return Err(Error::domain(format!(
                    "function {i} has zero L^{p} norm; the refined bound needs every norm > 0"
                )));
            }
            units.push(f.values.iter().map(|x| (x / norm).powf(0.5 * p)).collect());
            norms.push(norm);
        }
        Ok(Self { grid, norms, units })
    }

    /// `ḡ = Σ_k g_k / p_k`.
    fn mean(&self, ps: &ExponentTuple) -> Vec<f64> {
        (0..self.grid.len())
            .map(|j| compensated_sum(self.units.iter().zip(ps.exponents()).map(|(g, p)| g[j] / p)))
            .collect()
    }

    fn dispersion(&self, ps: &ExponentTuple, mean: &[f64]) -> f64 {
        compensated_sum(self.units.iter().zip(ps.exponents()).map(|(g, p)| {
            let d: Vec<f64> = g.iter().zip(mean).map(|(a, b)| a - b).collect();
            self.grid.dot(&d, &d) / p
        }))
    }
}

/// `Σ_i ‖g_i − ḡ‖_2² / p_i`, a number in `[0, 1]`.
pub fn holder_correction(fs: &[DiscretizedFunction], ps: &ExponentTuple) -> Result<f64> {
    let uv = UnitVectors::build(fs, ps)?;
    let mean = uv.mean(ps);
    Ok(uv.dispersion(ps, &mean).clamp(0.0, 1.0))
}

/// Evaluates both sides of the refined Hölder inequality.
///
/// `chain_ok` records `product_l1 ≤ refined_bound ≤ classical_bound` with
/// slack relative to `classical_bound`.
pub fn refined_holder(
    fs: &[DiscretizedFunction],
    ps: &ExponentTuple,
    tol: Tolerance,
) -> Result<HolderReport> {
    let uv = UnitVectors::build(fs, ps)?;
    let mean = uv.mean(ps);
    let correction = uv.dispersion(ps, &mean).clamp(0.0, 1.0);
    let mean_unit_vector_norm_sq = uv.grid.dot(&mean, &mean);
    let classical_bound: f64 = uv.norms.iter().product();
    let refined_bound = classical_bound * (1.0 - correction);
    let product_l1 = product_l1(fs)?;
    let chain_ok = tol.le(product_l1, refined_bound, classical_bound)
        && tol.le(refined_bound, classical_bound, classical_bound);
    Ok(HolderReport {
        product_l1,
        classical_bound,
        correction,
        refined_bound,
        norms: uv.norms,
        mean_unit_vector_norm_sq,
        chain_ok,
        tolerance_used: tol,
    })
}

fn pair_units(
    f: &DiscretizedFunction,
    g: &DiscretizedFunction,
    p: f64,
    q: f64,
) -> Result<(Vec<f64>, Vec<f64>, Quadrature)> {
    let ps = ExponentTuple::new(vec![p, q])?;
    let fs = [f.clone(), g.clone()];
    let uv = UnitVectors::build(&fs, &ps)?;
    let grid = uv.grid.clone();
    let mut units = uv.units.into_iter();
    let u = units.next().expect("two functions");
    let v = units.next().expect("two functions");
    Ok((u, v, grid))
}

/// `‖u − v‖_2² / (pq)` with `u`, `v` the normalized `f^{p/2}`, `g^{q/2}`.
pub fn two_function_correction(
    f: &DiscretizedFunction,
    g: &DiscretizedFunction,
    p: f64,
    q: f64,
) -> Result<f64> {
    let (u, v, grid) = pair_units(f, g, p, q)?;
    let d: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a - b).collect();
    Ok(grid.dot(&d, &d) / (p * q))
}

/// Angle in `[0, π]` between the normalized `f^{p/2}` and `g^{q/2}`.
///
/// The two-function correction equals `2(1 − cos θ)/(pq)`.
pub fn angular_distance(
    f: &DiscretizedFunction,
    g: &DiscretizedFunction,
    p: f64,
    q: f64,
) -> Result<f64> {
    let (u, v, grid) = pair_units(f, g, p, q)?;
    let diff: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a - b).collect();
    let sum: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
    // 2·atan2(‖u − v‖, ‖u + v‖) keeps full precision near 0 and π, where
    // arccos of the inner product does not.
    let theta = 2.0
        * grid
            .dot(&diff, &diff)
            .sqrt()
            .atan2(grid.dot(&sum, &sum).sqrt());
    Ok(theta.clamp(0.0, std::f64::consts::PI))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::refined_amgm_upper;
    use crate::means::geometric_mean;
    use crate::sample::WeightedSample;
    use crate::testing::rel_close;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_2;

    fn half() -> Quadrature {
        Quadrature::new(vec![0.5, 0.5]).unwrap()
    }

    fn func(values: &[f64], q: &Quadrature) -> DiscretizedFunction {
        DiscretizedFunction::new(values.to_vec(), q.clone()).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
    }

    #[test]
    fn lp_norm_examples() {
        let q = Quadrature::uniform(5).unwrap();
        let one = func(&[1.0; 5], &q);
        for p in [1.0, 1.5, 2.0, 3.0, 10.0] {
            assert!(rel_close(lp_norm(&one, p).unwrap(), 1.0, 1e-15));
        }
        let f = func(&[1.0, 2.0], &half());
        assert!(rel_close(lp_norm(&f, 2.0).unwrap(), 2.5f64.sqrt(), 1e-15));
        assert_eq!(lp_norm(&f, 1.0).unwrap(), 1.5);
        assert!(matches!(
            lp_norm(&f, 0.5),
            Err(Error::Parameter { name: "p", .. })
        ));
        assert_eq!(lp_norm(&func(&[0.0, 0.0], &half()), 3.0).unwrap(), 0.0);
    }

    #[test]
    fn product_l1_examples() {
        let q = half();
        let zero = func(&[0.0, 0.0], &q);
        let f = func(&[1.0, 2.0], &q);
        let g = func(&[3.0, 4.0], &q);
        assert_eq!(product_l1(&[f.clone(), zero, g.clone()]).unwrap(), 0.0);
        let one = func(&[1.0, 1.0], &q);
        assert_eq!(product_l1(&[one.clone(), one]).unwrap(), 1.0);
        assert_eq!(product_l1(&[f, g]).unwrap(), 5.5);
    }

    #[test]
    fn grids_must_match_bitwise() {
        let f = func(&[1.0, 2.0], &half());
        let g = func(
            &[1.0, 2.0],
            &Quadrature::new(vec![0.5, 0.5 + 1e-16]).unwrap(),
        );
        assert!(matches!(
            product_l1(&[f.clone(), g.clone()]),
            Err(Error::Grid(_))
        ));
        let ps = ExponentTuple::conjugate_pair(2.0).unwrap();
        assert!(matches!(
            holder_correction(&[f.clone(), g], &ps),
            Err(Error::Grid(_))
        ));
        // Separate but equal grids are compatible.
        let h = func(&[3.0, 1.0], &half());
        assert!(holder_correction(&[f, h], &ps).is_ok());
    }

    #[test]
    fn exponent_tuple_validation() {
        assert!(ExponentTuple::new(vec![2.0, 2.0]).is_ok());
        assert!(ExponentTuple::new(vec![3.0, 3.0, 3.0]).is_ok());
        assert!(ExponentTuple::new(vec![2.0]).is_err());
        assert!(ExponentTuple::new(vec![1.0, f64::INFINITY]).is_err());
        let err = ExponentTuple::new(vec![2.0, 2.5]).unwrap_err().to_string();
        assert!(err.contains("conjugate"), "{err}");
        let pair = ExponentTuple::conjugate_pair(3.0).unwrap();
        assert_eq!(pair.exponents(), &[3.0, 1.5]);
    }

    #[test]
    fn correction_examples() {
        let q = half();
        let ps = ExponentTuple::conjugate_pair(2.0).unwrap();
        let f = func(&[1.0, 3.0], &q);
        assert_eq!(
            holder_correction(&[f.clone(), f.clone()], &ps).unwrap(),
            0.0
        );

        // Orthogonal unit vectors: 1 − ‖(u + v)/2‖² = 1 − 2/4.
        let f = func(&[1.0, 0.0], &q);
        let g = func(&[0.0, 1.0], &q);
        assert!(rel_close(
            holder_correction(&[f.clone(), g.clone()], &ps).unwrap(),
            0.5,
            1e-15
        ));
        assert!(rel_close(
            two_function_correction(&f, &g, 2.0, 2.0).unwrap(),
            0.5,
            1e-15
        ));
        assert!(rel_close(
            angular_distance(&f, &g, 2.0, 2.0).unwrap(),
            FRAC_PI_2,
            1e-15
        ));
        assert_eq!(angular_distance(&f, &f, 2.0, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn correction_errors() {
        let q = half();
        let ps = ExponentTuple::conjugate_pair(2.0).unwrap();
        let f = func(&[1.0, 3.0], &q);
        let zero = func(&[0.0, 0.0], &q);
        assert!(matches!(
            holder_correction(&[f.clone(), zero], &ps),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            holder_correction(std::slice::from_ref(&f), &ps),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            two_function_correction(&f, &f, 2.0, 3.0),
            Err(Error::Parameter {
                name: "exponents",
                ..
            })
        ));
    }

    #[test]
    fn equality_case_of_holder() {
        let q = Quadrature::uniform(4).unwrap();
        let f = func(&[0.5, 1.0, 2.0, 3.5], &q);
        for p in [1.5, 2.0, 3.0, 4.0] {
            let g = func(
                &f.values()
                    .iter()
                    .map(|x| x.powf(p - 1.0))
                    .collect::<Vec<_>>(),
                &q,
            );
            let ps = ExponentTuple::conjugate_pair(p).unwrap();
            let r = refined_holder(&[f.clone(), g], &ps, Tolerance::default()).unwrap();
            assert!(r.correction <= 1e-12, "p={p}: {}", r.correction);
            assert!(rel_close(r.product_l1, r.classical_bound, 1e-12));
            assert!(r.chain_ok);
        }
    }

    #[test]
    fn same_function_p2_is_equality_throughout() {
        let q = Quadrature::uniform(3).unwrap();
        let f = func(&[1.0, 2.0, 4.0], &q);
        let ps = ExponentTuple::conjugate_pair(2.0).unwrap();
        let r = refined_holder(&[f.clone(), f.clone()], &ps, Tolerance::default()).unwrap();
        let n2 = lp_norm(&f, 2.0).unwrap().powi(2);
        assert_eq!(r.correction, 0.0);
        assert!(rel_close(r.refined_bound, n2, 1e-15));
        assert!(rel_close(r.product_l1, n2, 1e-15));
    }

    #[test]
    fn single_point_grid_reduces_to_amgm() {
        let q = Quadrature::new(vec![1.0]).unwrap();
        let ps = ExponentTuple::new(vec![2.0, 3.0, 6.0]).unwrap();
        let vals = [1.7, 0.4, 2.9];
        let fs: Vec<_> = vals.iter().map(|&v| func(&[v], &q)).collect();
        let r = refined_holder(&fs, &ps, Tolerance::default()).unwrap();
        let xs: Vec<f64> = vals
            .iter()
            .zip(ps.exponents())
            .map(|(f, p)| f.powf(*p))
            .collect();
        let ws = WeightedSample::new(ps.exponents().iter().map(|p| 1.0 / p).collect(), xs).unwrap();
        assert!(rel_close(r.product_l1, geometric_mean(&ws), 1e-12));
        assert!(rel_close(r.classical_bound, r.product_l1, 1e-12));
        assert!(r.correction <= 1e-12);
    }

    fn arb_family() -> impl Strategy<Value = (Vec<DiscretizedFunction>, ExponentTuple)> {
        (2usize..5, 1usize..12).prop_flat_map(|(n, len)| {
            (
                prop::collection::vec(0.05f64..1.0, len),
                prop::collection::vec(prop::collection::vec(0.0f64..5.0, len), n),
                prop::collection::vec(0.05f64..1.0, n),
            )
                .prop_filter_map("zero function", |(w, fvals, r)| {
                    let q = Quadrature::new(w).ok()?;
                    let total: f64 = compensated_sum(r.iter().copied());
                    let ps = ExponentTuple::new(r.iter().map(|x| total / x).collect()).ok()?;
                    let fs: Vec<_> = fvals
                        .into_iter()
                        .map(|v| DiscretizedFunction::new(v, q.clone()).unwrap())
                        .collect();
                    fs.iter()
                        .all(|f| f.values().iter().any(|&x| x > 0.0))
                        .then_some((fs, ps))
                })
        })
    }

    proptest! {
        #[test]
        fn correction_is_one_minus_mean_norm((fs, ps) in arb_family()) {
            let r = refined_holder(&fs, &ps, Tolerance::default()).unwrap();
            prop_assert!(close(r.correction, 1.0 - r.mean_unit_vector_norm_sq, 1e-12));
            prop_assert!((0.0..=1.0).contains(&r.correction));
            prop_assert!(r.chain_ok);
        }

        #[test]
        fn pointwise_amgm_integrates_to_the_correction((fs, ps) in arb_family()) {
            // At each node, x_i = g_i² with weights 1/p_i; the refined AM-GM
            // upper bound there is ḡ², so its integral is 1 − correction.
            let corr = holder_correction(&fs, &ps).unwrap();
            let norms: Vec<f64> = fs.iter().zip(ps.exponents()).map(|(f, &p)| lp_norm(f, p).unwrap()).collect();
            let alphas: Vec<f64> = ps.exponents().iter().map(|p| p.recip()).collect();
            let total = compensated_sum(ps.exponents().iter().map(|p| p.recip()));
            let q = fs[0].quadrature().clone();
            let integral = compensated_sum(q.weights().iter().enumerate().map(|(j, w)| {
                let xs = fs.iter().zip(ps.exponents()).zip(&norms)
                    .map(|((f, p), n)| (f.values()[j] / n).powf(*p)).collect();
                let ws = WeightedSample::new(alphas.iter().map(|a| a / total).collect(), xs).unwrap();
                w * refined_amgm_upper(&ws)
            }));
            prop_assert!(close(integral, 1.0 - corr, 1e-12), "{integral} vs {}", 1.0 - corr);
        }

        #[test]
        fn correction_ignores_scaling((fs, ps) in arb_family(), c in prop::collection::vec(1e-3f64..1e3, 5)) {
            let scaled: Vec<_> = fs.iter().zip(&c).map(|(f, c)| {
                DiscretizedFunction::new(f.values().iter().map(|x| c * x).collect(), f.quadrature().clone()).unwrap()
            }).collect();
            let a = holder_correction(&fs, &ps).unwrap();
            let b = holder_correction(&scaled, &ps).unwrap();
            prop_assert!(close(a, b, 1e-12));
        }

        #[test]
        fn two_function_view_agrees((fs, _) in arb_family(), p in 1.05f64..8.0) {
            let ps = ExponentTuple::conjugate_pair(p).unwrap();
            let q = ps.exponents()[1];
            let general = holder_correction(&fs[..2], &ps).unwrap();
            let pair = two_function_correction(&fs[0], &fs[1], p, q).unwrap();
            prop_assert!(close(general, pair, 1e-12), "{general} vs {pair}");
            let theta = angular_distance(&fs[0], &fs[1], p, q).unwrap();
            prop_assert!((0.0..=std::f64::consts::PI).contains(&theta));
            prop_assert!(close(2.0 * (1.0 - theta.cos()) / (p * q), pair, 1e-12));
        }
    }
}
