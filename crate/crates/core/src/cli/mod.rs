//! The `amgm` command-line driver.
//!
//! Exit codes: 0 when every checked inequality holds, 1 when one is violated
//! (a numerical-tolerance problem on valid input), 2 for input or usage
//! errors. Reports go to standard output, diagnostics to standard error.

pub mod input;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::verify_chain;
use crate::holder::refined_holder;
use crate::sample::Tolerance;
use crate::search::{maximize_ratio, ratio_vs_delta_table, SearchConfig};

use input::InputFormat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "amgm",
    version,
    about = "Refined AM-GM and Hölder bounds, and extremal gap search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify GM ≤ AM − Var(√x) ≤ AM and the Cartwright–Field sandwich for one sample.
    Bounds(BoundsArgs),
    /// Evaluate the refined Hölder inequality for discretized functions.
    Holder(HolderArgs),
    /// Search for large (AM − GM)/Var(√x) under a minimum-weight floor.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
struct ToleranceArgs {
    /// Relative slack, scaled by the arithmetic mean (or the classical Hölder bound).
    #[arg(long, default_value_t = Tolerance::DEFAULT_RELATIVE, allow_hyphen_values = true)]
    tol_rel: f64,
    /// Absolute slack added on top of the relative one.
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    tol_abs: f64,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// Input file (`-` for standard input).
    input: PathBuf,
    #[command(flatten)]
    tol: ToleranceArgs,
    /// Rescale weights that sum to 1 within 1e-6 instead of rejecting them.
    #[arg(long)]
    renormalize_weights: bool,
    /// Input format.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
    /// Emit a single JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct HolderArgs {
    /// JSON input file (`-` for standard input).
    input: PathBuf,
    #[command(flatten)]
    tol: ToleranceArgs,
    /// Emit a single JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Number of points in each sample.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Minimum weight; required unless `--table` is given.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// Independent restarts.
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    /// Pattern-search polls per restart.
    #[arg(long = "iters", default_value_t = 200)]
    iterations: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Initial pattern step.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    step_scale: f64,
    /// Comma-separated weight floors; prints one best ratio per floor.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    table: Vec<f64>,
    /// Worker threads (results do not depend on this).
    #[arg(long)]
    threads: Option<usize>,
    /// Include per-restart best-so-far traces.
    #[arg(long)]
    trace: bool,
    /// Emit a single JSON document.
    #[arg(long)]
    json: bool,
}

#[derive(Serialize)]
struct TableRow {
    delta: f64,
    best_ratio: f64,
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Bounds(a) => cmd_bounds(a, out),
        Command::Holder(a) => cmd_holder(a, out),
        Command::Search(a) => cmd_search(a, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn tolerance(args: &ToleranceArgs) -> Result<Tolerance, String> {
    Tolerance::new(args.tol_rel, args.tol_abs).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| e.to_string())
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), String> {
    emit_text(out, &to_json(value)?)
}

fn emit_text(out: &mut dyn Write, text: &str) -> Result<(), String> {
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn cmd_bounds(args: BoundsArgs, out: &mut dyn Write) -> Result<i32, String> {
    let tol = tolerance(&args.tol)?;
    let text = input::read_source(&args.input).map_err(|e| e.to_string())?;
    let format = input::resolve_format(&args.input, args.format);
    let sample =
        input::parse_bounds(&text, format, args.renormalize_weights).map_err(|e| e.to_string())?;
    let report = verify_chain(&sample, tol);
    if args.json {
        emit(out, &report)?;
    } else {
        emit_text(out, &output::bounds_table(&report))?;
    }
    Ok(if report.chain_ok {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    })
}

fn cmd_holder(args: HolderArgs, out: &mut dyn Write) -> Result<i32, String> {
    let tol = tolerance(&args.tol)?;
    let text = input::read_source(&args.input).map_err(|e| e.to_string())?;
    let parsed = input::parse_holder(&text).map_err(|e| e.to_string())?;
    let report =
        refined_holder(&parsed.functions, &parsed.exponents, tol).map_err(|e| e.to_string())?;
    if args.json {
        emit(out, &report)?;
    } else {
        emit_text(out, &output::holder_table(&report))?;
    }
    Ok(if report.chain_ok {
        EXIT_OK
    } else {
        EXIT_VIOLATED
    })
}

fn cmd_search(args: SearchArgs, out: &mut dyn Write) -> Result<i32, String> {
    let run = || search_body(&args);
    let (text, code) = match args.threads {
        Some(0) => return Err("invalid parameter `threads`: must be >= 1".into()),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| e.to_string())?
            .install(run)?,
        None => run()?,
    };
    emit_text(out, &text)?;
    Ok(code)
}

fn search_body(args: &SearchArgs) -> Result<(String, i32), String> {
    let base = SearchConfig {
        n: args.n,
        delta: args.delta.unwrap_or(f64::NAN),
        restarts: args.restarts,
        iterations: args.iterations,
        seed: args.seed,
        step_scale: args.step_scale,
    };

    if !args.table.is_empty() {
        let rows = ratio_vs_delta_table(args.n, &args.table, &base).map_err(|e| e.to_string())?;
        let text = if args.json {
            let doc: Vec<TableRow> = rows
                .iter()
                .map(|&(delta, best_ratio)| TableRow { delta, best_ratio })
                .collect();
            to_json(&doc)?
        } else {
            output::delta_table(&rows)
        };
        let ok = rows
            .iter()
            .all(|&(_, r)| r >= 1.0 - Tolerance::DEFAULT_RELATIVE);
        return Ok((text, if ok { EXIT_OK } else { EXIT_VIOLATED }));
    }

    if args.delta.is_none() {
        return Err("invalid parameter `delta`: required unless --table is given".into());
    }
    let mut result = maximize_ratio(&base).map_err(|e| e.to_string())?;
    if !args.trace {
        result.traces.clear();
    }
    let text = if args.json {
        to_json(&result)?
    } else {
        output::search_table(&result)
    };
    let ok = result.best_ratio >= 1.0 - Tolerance::DEFAULT_RELATIVE;
    Ok((text, if ok { EXIT_OK } else { EXIT_VIOLATED }))
}
