//! Input documents for the `bounds` and `holder` subcommands.
//!
//! Bounds input is either a JSON object `{"weights": [..], "values": [..]}`
//! or a two-column CSV file with one `weight,value` pair per line. Holder
//! input is a JSON object `{"quadrature": [..], "exponents": [..],
//! "functions": [[..], ..]}`.

use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use crate::error::Error;
use crate::holder::{DiscretizedFunction, ExponentTuple, Quadrature};
use crate::sample::WeightedSample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// CSV when the file name ends in `.csv`, JSON otherwise.
    Auto,
    Json,
    Csv,
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed CSV input: {0}")]
    Csv(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

#[derive(Debug, Deserialize)]
struct BoundsDocument {
    weights: Vec<f64>,
    values: Vec<f64>,
}

#[derive(Debug, Deserialize)]
struct HolderDocument {
    quadrature: Vec<f64>,
    exponents: Vec<f64>,
    functions: Vec<Vec<f64>>,
}

/// A parsed holder-mode input.
#[derive(Debug, Clone)]
pub struct HolderInput {
    pub functions: Vec<DiscretizedFunction>,
    pub exponents: ExponentTuple,
}

pub fn read_source(path: &Path) -> Result<String, InputError> {
    let io_err = |source| InputError::Io {
        path: path.display().to_string(),
        source,
    };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

pub fn resolve_format(path: &Path, format: InputFormat) -> InputFormat {
    match format {
        InputFormat::Auto => {
            let is_csv = path
                .extension()
                .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
            if is_csv {
                InputFormat::Csv
            } else {
                InputFormat::Json
            }
        }
        other => other,
    }
}

pub fn parse_bounds(
    text: &str,
    format: InputFormat,
    renormalize: bool,
) -> Result<WeightedSample, InputError> {
    let (weights, values) = match format {
        InputFormat::Csv => parse_pairs_csv(text)?,
        InputFormat::Json | InputFormat::Auto => {
            let doc: BoundsDocument = serde_json::from_str(text)?;
            (doc.weights, doc.values)
        }
    };
    let sample = if renormalize {
        WeightedSample::renormalized(weights, values)?
    } else {
        WeightedSample::new(weights, values)?
    };
    Ok(sample)
}

fn parse_pairs_csv(text: &str) -> Result<(Vec<f64>, Vec<f64>), InputError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut weights = Vec::new();
    let mut values = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| InputError::Csv(e.to_string()))?;
        let line = record.position().map_or(index as u64 + 1, |p| p.line());
        if record.len() != 2 {
            return Err(InputError::Csv(format!(
                "line {line}: expected 2 columns (weight,value), found {}",
                record.len()
            )));
        }
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(pair) => {
                weights.push(pair[0]);
                values.push(pair[1]);
            }
            // A non-numeric first row is a header.
            Err(_) if index == 0 => continue,
            Err(e) => {
                return Err(InputError::Csv(format!("line {line}: {e}")));
            }
        }
    }
    Ok((weights, values))
}

pub fn parse_holder(text: &str) -> Result<HolderInput, InputError> {
    let doc: HolderDocument = serde_json::from_str(text)?;
    if doc.functions.is_empty() {
        return Err(
            Error::Validation("`functions` must contain at least one function".into()).into(),
        );
    }
    if doc.functions.len() != doc.exponents.len() {
        return Err(Error::Validation(format!(
            "{} functions but {} exponents",
            doc.functions.len(),
            doc.exponents.len()
        ))
        .into());
    }
    let exponents = ExponentTuple::new(doc.exponents)?;
    let quadrature = Quadrature::new(doc.quadrature)?;
    let functions = doc
        .functions
        .into_iter()
        .map(|values| DiscretizedFunction::new(values, quadrature.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HolderInput {
        functions,
        exponents,
    })
}
