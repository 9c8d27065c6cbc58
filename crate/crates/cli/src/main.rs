//! `gsvkit <mode> --job FILE [--oracle] [--quiet]`
//!
//! Exit status: 0 when everything is consistent, 1 on bad input, 2 when a
//! result contradicts a theorem or the oracle.

mod job;
mod modes;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Map, Value};

use job::Mode;

#[derive(Debug, Parser)]
#[command(
    name = "gsvkit",
    version,
    about = "GSV and Schwartz indices of foliations along complete-intersection curves"
)]
struct Cli {
    /// What to compute.
    #[arg(value_enum)]
    mode: Mode,
    /// Job file (TOML).
    #[arg(long)]
    job: PathBuf,
    /// Recheck every quotient dimension by Macaulay-matrix linear algebra.
    #[arg(long)]
    oracle: bool,
    /// Do not print the table on standard error.
    #[arg(long)]
    quiet: bool,
}

/// Bad input, tied to the field it came from.
#[derive(Debug, thiserror::Error)]
#[error("{field}: {message}")]
pub struct InputError {
    pub field: String,
    pub message: String,
}

impl InputError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        InputError { field: field.into(), message: message.into() }
    }
}

fn echo_inputs(text: &str, oracle: bool) -> Value {
    // The file already parsed once, so this cannot fail.
    let parsed: toml::Table = toml::from_str(text).unwrap_or_default();
    let mut v = serde_json::to_value(parsed).unwrap_or(Value::Null);
    if let Value::Object(map) = &mut v {
        map.insert("oracle".into(), json!(oracle));
    }
    v
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut top = Map::new();
    top.insert("mode".into(), json!(cli.mode.name()));

    let outcome = std::fs::read_to_string(&cli.job)
        .map_err(|e| InputError::new("--job", format!("cannot read {}: {e}", cli.job.display())))
        .and_then(|text| {
            let job = job::parse_job(&text)?;
            top.insert("inputs".into(), echo_inputs(&text, cli.oracle));
            modes::run_mode(cli.mode, &job, cli.oracle)
        });

    let code = match outcome {
        Ok(out) => {
            let code = if out.anomalies.is_empty() { 0 } else { 2 };
            if !cli.quiet {
                eprint!("{}", report::table(cli.mode.name(), &Value::Object(out.results.clone()), &out.anomalies));
            }
            top.insert("results".into(), Value::Object(out.results));
            top.insert("anomalies".into(), json!(out.anomalies));
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            top.insert("error".into(), json!({"field": e.field, "message": e.message}));
            1
        }
    };
    top.insert("timing".into(), json!({"elapsed_ms": started.elapsed().as_millis() as u64}));
    let mut v = Value::Object(top);
    report::canonicalize(&mut v);
    print!("{}", report::render(&v));
    ExitCode::from(code)
}
