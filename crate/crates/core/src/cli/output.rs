//! Human-readable tables. Machine output is plain `serde_json`.

use std::fmt::Write;

use crate::bounds::BoundReport;
use crate::holder::HolderReport;
use crate::search::SearchResult;

/// 17 significant digits, enough to round-trip any `f64`.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

fn nums(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

fn row(out: &mut String, key: &str, value: impl AsRef<str>) {
    let _ = writeln!(out, "{key:<26}{}", value.as_ref());
}

pub fn bounds_table(r: &BoundReport) -> String {
    let mut out = String::new();
    row(&mut out, "quantity", "value");
    row(&mut out, "am", num(r.am));
    row(&mut out, "gm", num(r.gm));
    row(&mut out, "power_mean_half", num(r.power_mean_half));
    row(&mut out, "sqrt_var", num(r.sqrt_var));
    row(&mut out, "refined_upper", num(r.refined_upper));
    row(&mut out, "gap", num(r.gap));
    let cf = |x: Option<f64>| x.map_or_else(|| "undefined (zero value)".to_string(), num);
    row(&mut out, "cf_lower", cf(r.cf_lower));
    row(&mut out, "cf_upper", cf(r.cf_upper));
    row(&mut out, "tol_rel", num(r.tolerance_used.relative));
    row(&mut out, "tol_abs", num(r.tolerance_used.absolute));
    row(&mut out, "chain_ok", r.chain_ok.to_string());
    out
}

pub fn holder_table(r: &HolderReport) -> String {
    let mut out = String::new();
    row(&mut out, "quantity", "value");
    row(&mut out, "product_l1", num(r.product_l1));
    row(&mut out, "refined_bound", num(r.refined_bound));
    row(&mut out, "classical_bound", num(r.classical_bound));
    row(&mut out, "correction", num(r.correction));
    row(
        &mut out,
        "mean_unit_vector_norm_sq",
        num(r.mean_unit_vector_norm_sq),
    );
    row(&mut out, "norms", nums(&r.norms));
    row(&mut out, "tol_rel", num(r.tolerance_used.relative));
    row(&mut out, "tol_abs", num(r.tolerance_used.absolute));
    row(&mut out, "chain_ok", r.chain_ok.to_string());
    out
}

pub fn search_table(r: &SearchResult) -> String {
    let mut out = String::new();
    row(&mut out, "best_ratio", num(r.best_ratio));
    row(&mut out, "best_weights", nums(r.best_sample.weights()));
    row(&mut out, "best_values", nums(r.best_sample.values()));
    row(&mut out, "restart_ratios", nums(&r.restart_ratios));
    row(&mut out, "evaluations", r.evaluations.to_string());
    for (i, t) in r.traces.iter().enumerate() {
        row(&mut out, &format!("trace[{i}]"), nums(t));
    }
    out
}

pub fn delta_table(rows: &[(f64, f64)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<26}best_ratio", "delta");
    for &(d, r) in rows {
        let _ = writeln!(out, "{:<26}{}", num(d), num(r));
    }
    out
}
