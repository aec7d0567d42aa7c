//! Browser bindings. Every entry point takes and returns JSON text; failures
//! come back as `{"error": "..."}`.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use rieszkit::pl::counterexample_witness;
use rieszkit::report;
use rieszkit::{PLFunction, Rational};

fn respond(result: rieszkit::Result<Value>) -> String {
    let value = result.unwrap_or_else(|e| json!({ "error": e.to_string() }));
    serde_json::to_string(&value).expect("report serializes")
}

fn parse(input: &str) -> rieszkit::Result<Value> {
    serde_json::from_str(input).map_err(|e| rieszkit::Error::Parse(format!("invalid JSON: {e}")))
}

/// Full report for `{"labels": [...], "basis": [[...]]}`.
#[wasm_bindgen]
pub fn analyze(input: &str) -> String {
    respond(parse(input).and_then(|v| report::parse_subspace(&v)).and_then(|y| report::analyze_report(&y)))
}

/// Classification of a functional given as `{label: coefficient}`.
#[wasm_bindgen]
pub fn classify(input: &str) -> String {
    respond(
        parse(input)
            .and_then(|v| report::parse_functional(&v))
            .and_then(|phi| report::classify_report(&phi)),
    )
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn plot_points(f: &PLFunction) -> Value {
    f.breakpoints()
        .iter()
        .zip(f.values())
        .map(|(t, v)| json!([to_f64(t), to_f64(v)]))
        .collect()
}

/// The certificate report for `n` plus float polylines of `f₀` and `w_n`
/// for plotting.
#[wasm_bindgen]
pub fn pl_witness(n: u32) -> String {
    respond(report::pl_demo_report(u64::from(n)).and_then(|mut r| {
        let w = counterexample_witness(u64::from(n))?;
        r["plot"] = json!({
            "f0": plot_points(&PLFunction::identity()),
            "witness": plot_points(&w),
        });
        Ok(r)
    }))
}
