//! `nondeg`: invariants of a Newton nondegenerate surface singularity from
//! the monomial support of its equation.

mod commands;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use nondeg_core::{Error, Support};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "nondeg", version, about = "Invariants of Newton nondegenerate surface singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document; standard input when omitted or `-`.
    #[arg(global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Compact faces, convenience, link type and anatomy of the diagram.
    Diagram,
    /// Resolution graph from Oka's algorithm.
    Graph {
        /// Blow down to the minimal good resolution.
        #[arg(long)]
        minimal: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Geometric genus.
    Pg,
    /// The part of the spectrum in (-1, 0].
    Spectrum,
    /// Poincare series of the Newton filtration.
    Poincare {
        /// Largest exponent kept, an integer or `p/q`.
        #[arg(long, value_name = "R")]
        max_exponent: String,
    },
    /// Normalized Seiberg-Witten invariant of the link.
    Sw,
    /// Cross-check the invariants against independent computations.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Points,
    Sequences,
    Series,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct InputDocument {
    name: Option<String>,
    monomials: Vec<[u64; 3]>,
}

/// What a subcommand hands back to `main`.
pub enum Output {
    Report { result: Value, oracles: Option<Value> },
    Plain(String),
}

/// An error together with the process exit code it maps to.
pub struct Failure {
    pub error: Error,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { error, code: 1 }
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<(Option<String>, Support), String> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            s
        }
    };
    let doc: InputDocument =
        serde_json::from_str(&text).map_err(|e| format!("invalid input document: {e}"))?;
    if doc.monomials.is_empty() {
        return Err("invalid input document: monomials must be nonempty".into());
    }
    let mut points = Vec::with_capacity(doc.monomials.len());
    for m in &doc.monomials {
        let mut p = [0i64; 3];
        for (x, y) in p.iter_mut().zip(m) {
            *x = i64::try_from(*y).map_err(|_| format!("exponent {y} is too large"))?;
        }
        points.push(p);
    }
    let support = Support::from_i64(&points).map_err(|e| format!("invalid input document: {e}"))?;
    Ok((doc.name, support))
}

fn command_echo(cmd: &Command) -> Value {
    match cmd {
        Command::Diagram => json!({ "name": "diagram" }),
        Command::Graph { minimal, format } => json!({
            "name": "graph",
            "minimal": minimal,
            "format": format!("{format:?}").to_lowercase(),
        }),
        Command::Pg => json!({ "name": "pg" }),
        Command::Spectrum => json!({ "name": "spectrum" }),
        Command::Poincare { max_exponent } => json!({ "name": "poincare", "max_exponent": max_exponent }),
        Command::Sw => json!({ "name": "sw" }),
        Command::Verify { suite } => json!({
            "name": "verify",
            "suite": format!("{suite:?}").to_lowercase(),
        }),
    }
}

fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize")));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (name, support) = match read_input(cli.input.as_ref()) {
        Ok(x) => x,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let outcome = commands::run(&cli.command, &support);
    let elapsed = start.elapsed();
    let mut report = json!({ "command": command_echo(&cli.command), "input": name });
    if cli.timing {
        report["timing"] = json!({ "seconds": elapsed.as_secs_f64() });
    }
    match outcome {
        Ok(Output::Plain(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Ok(Output::Report { result, oracles }) => {
            let failed = oracles.as_ref().is_some_and(|o| {
                o.as_object().is_some_and(|m| m.values().any(|v| v == &Value::Bool(false)))
            });
            report["result"] = result;
            if let Some(o) = oracles {
                report["oracles"] = o;
            }
            print_json(&report);
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure { error, code }) => {
            report["error"] = json!({ "name": error.name(), "message": error.to_string() });
            print_json(&report);
            ExitCode::from(code)
        }
    }
}
