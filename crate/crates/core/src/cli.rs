//! Command-line front end.
//!
//! Exit codes: 0 success, 1 oracle mismatch, 2 malformed input or usage,
//! 3 semantically invalid input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::generator::{random_subspace, Seed};
use crate::oracle;
use crate::ratlinalg::{pre_annihilator, Subspace};
use crate::report::{self, matrix_json};
use crate::sublattice::{constraint_set, sublattice_closure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rieszkit", version, about = "Exact sublattice and ideal analysis of ℚ^Ω")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a subspace given as {"labels": [...], "basis": [[...]]}.
    Analyze {
        /// Input file, or "-" for stdin.
        #[arg(long)]
        input: String,
    },
    /// Compare the constraint engine with the brute-force oracle on random subspaces.
    OracleCheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        /// Drop one constraint from every engine answer (harness self-test).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Classify a functional given as {label: coefficient, ...}.
    Classify {
        #[arg(long)]
        input: String,
    },
    /// Certificate that the ideal of functions vanishing near 0 is not uniformly closed.
    PlDemo {
        #[arg(long)]
        n: u64,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_MALFORMED,
        _ => EXIT_SEMANTIC,
    }
}

fn read_json(path: &str, stdin: &mut dyn Read) -> Result<Value, Error> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))?;
    }
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

/// One randomly generated oracle-check case that disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub seed: u64,
    pub input: Subspace,
    pub engine: Subspace,
    pub oracle: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSummary {
    pub cases: usize,
    pub agree: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Draws `cases` subspaces (ambient dimension in `1..=max_dim`, every
/// dimension possible) and compares the engine's closure with the oracle's.
pub fn oracle_sweep(seed: u64, cases: usize, max_dim: usize, inject_fault: bool) -> Result<SweepSummary, Error> {
    if !(1..=8).contains(&max_dim) {
        return Err(Error::OutOfRange(format!("--max-dim {max_dim} not in 1..=8")));
    }
    let mut state = Seed::new(seed);
    let mut summary = SweepSummary {
        cases,
        agree: 0,
        mismatches: Vec::new(),
    };
    for _ in 0..cases {
        let case_seed = state;
        let (n, s) = state.range(1, max_dim as i64);
        let (d, s) = s.range(0, n);
        let (y, s) = random_subspace(s, n as usize, d as usize)?;
        state = s;

        let engine = if inject_fault {
            let mut functionals = constraint_set(&y)?.functionals();
            if !functionals.is_empty() {
                functionals.remove(0);
            }
            pre_annihilator(y.labels(), &functionals)?
        } else {
            sublattice_closure(&y)?
        };
        let oracle = oracle::generated_by_rows(y.labels(), y.basis())?;
        if engine == oracle {
            summary.agree += 1;
        } else {
            summary.mismatches.push(Mismatch {
                seed: case_seed.state(),
                input: y,
                engine,
                oracle,
            });
        }
    }
    Ok(summary)
}

fn sweep_json(seed: u64, max_dim: usize, s: &SweepSummary) -> Value {
    json!({
        "seed": seed,
        "cases": s.cases,
        "max_dim": max_dim,
        "agree": s.agree,
        "mismatches": s.mismatches.iter().map(|m| json!({
            "seed": m.seed,
            "labels": m.input.labels().names(),
            "basis": matrix_json(m.input.basis()),
            "engine_closure": matrix_json(m.engine.basis()),
            "oracle_closure": matrix_json(m.oracle.basis()),
        })).collect::<Vec<_>>(),
    })
}

fn emit(out: &mut dyn Write, format: Format, value: &Value, text: Option<String>) {
    let rendered = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => text.unwrap_or_else(|| report::to_text(value)),
    };
    let _ = out.write_all(rendered.as_bytes());
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    let result = match cli.command {
        Command::Analyze { input } => read_json(&input, stdin)
            .and_then(|v| report::parse_subspace(&v))
            .and_then(|y| report::analyze_report(&y))
            .map(|r| {
                emit(stdout, format, &r, None);
                EXIT_OK
            }),
        Command::Classify { input } => read_json(&input, stdin)
            .and_then(|v| report::parse_functional(&v))
            .and_then(|phi| report::classify_report(&phi))
            .map(|r| {
                emit(stdout, format, &r, None);
                EXIT_OK
            }),
        Command::PlDemo { n } => report::pl_demo_report(n).map(|r| {
            emit(stdout, format, &r, None);
            EXIT_OK
        }),
        Command::OracleCheck {
            seed,
            cases,
            max_dim,
            inject_fault,
        } => {
            let start = Instant::now();
            oracle_sweep(seed, cases, max_dim, inject_fault).map(|summary| {
                let text = format!("{}/{} agree\n", summary.agree, summary.cases);
                let value = sweep_json(seed, max_dim, &summary);
                let text = match summary.mismatches.first() {
                    None => text,
                    Some(m) => format!(
                        "{text}first mismatch: seed {} labels {:?} basis {}\n",
                        m.seed,
                        m.input.labels().names(),
                        matrix_json(m.input.basis())
                    ),
                };
                emit(stdout, format, &value, Some(text));
                let _ = writeln!(stderr, "elapsed: {} ms", start.elapsed().as_millis());
                if summary.mismatches.is_empty() {
                    EXIT_OK
                } else {
                    EXIT_MISMATCH
                }
            })
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
