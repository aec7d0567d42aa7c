//! JSON encoding of inputs and reports.
//!
//! Rationals are strings `"p/q"`, vectors and functionals are objects keyed by
//! label, and object keys come out sorted, so identical inputs give identical
//! bytes.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::functional::{
    classify, is_full_codim1, kernel_subspace, max_disjoint_nonvanishing, FullnessWitness,
};
use crate::ideal::{is_ideal, largest_ideal_in, quotient_by_ideal, IdealDescriptor};
use crate::labels::Labels;
use crate::lattice::{ENorm, Functional, LatticeVector};
use crate::oracle;
use crate::pl::{counterexample_witness, pl_e_norm, PLFunction};
use crate::ratlinalg::Subspace;
use crate::rational::{self, Rational};
use crate::sublattice::{
    clan_decomposition, constraint_set, factor_into_codim1, non_sublattice_witness,
    sublattice_closure, unit_vector_bounds, unit_vector_census, Constraint,
};

pub fn rational_json(r: &Rational) -> Value {
    Value::String(rational::format(r))
}

pub fn row_json(row: &[Rational]) -> Value {
    Value::Array(row.iter().map(rational_json).collect())
}

pub fn matrix_json(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| row_json(r)).collect())
}

fn keyed(labels: &Labels, values: &[Rational]) -> Value {
    let map: Map<String, Value> = labels
        .iter()
        .zip(values)
        .map(|(l, v)| (l.to_string(), rational_json(v)))
        .collect();
    Value::Object(map)
}

pub fn vector_json(v: &LatticeVector) -> Value {
    keyed(v.labels(), v.coords())
}

pub fn functional_json(phi: &Functional) -> Value {
    keyed(phi.labels(), phi.coeffs())
}

fn names(labels: &Labels, indices: &[usize]) -> Value {
    Value::Array(indices.iter().map(|&i| json!(labels.name(i))).collect())
}

pub fn subspace_json(y: &Subspace) -> Value {
    json!({
        "labels": y.labels().names(),
        "basis": matrix_json(y.basis()),
        "dimension": y.dim(),
        "codimension": y.codimension(),
    })
}

pub fn constraint_json(c: &Constraint, labels: &Labels) -> Value {
    match c {
        Constraint::PointVanish { s } => json!({"kind": "vanish", "s": labels.name(*s)}),
        Constraint::Proportionality { s, t, alpha } => json!({
            "kind": "prop",
            "s": labels.name(*s),
            "t": labels.name(*t),
            "alpha": rational::format(alpha),
        }),
    }
}

fn constraints_json(cs: &[Constraint], labels: &Labels) -> Value {
    Value::Array(cs.iter().map(|c| constraint_json(c, labels)).collect())
}

pub fn ideal_json(j: &IdealDescriptor) -> Value {
    json!({ "zero_set": j.zero_set_names() })
}

pub fn pl_json(f: &PLFunction) -> Value {
    json!({
        "breakpoints": f.breakpoints().iter().map(rational::format).collect::<Vec<_>>(),
        "values": f.values().iter().map(rational::format).collect::<Vec<_>>(),
    })
}

pub fn norm_json(n: &ENorm) -> Value {
    match n {
        ENorm::Finite(r) => rational_json(r),
        ENorm::Infinite => json!("inf"),
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Accepts `"p/q"` strings and JSON integers.
pub fn parse_rational_value(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) => n
            .as_i64()
            .map(rational::int)
            .ok_or_else(|| malformed(format!("{n} is not an integer; write rationals as \"p/q\""))),
        other => Err(malformed(format!("expected a rational, found {other}"))),
    }
}

fn parse_row(v: &Value) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| malformed("expected an array of rationals"))?
        .iter()
        .map(parse_rational_value)
        .collect()
}

fn parse_labels(v: Option<&Value>) -> Result<Labels> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("missing array field `labels`"))?;
    let names = arr
        .iter()
        .map(|l| match l {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            other => Err(malformed(format!("label {other} is not a string"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Labels::new(names)
}

/// `{"labels": [...], "basis": [[...], ...]}`.
pub fn parse_subspace(v: &Value) -> Result<Subspace> {
    let labels = parse_labels(v.get("labels"))?;
    let rows = v
        .get("basis")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("missing array field `basis`"))?
        .iter()
        .map(parse_row)
        .collect::<Result<Vec<_>>>()?;
    Subspace::span(&labels, &rows)
}

/// Either `{"labels": [...], "coefficients": [...]}` or a plain object
/// `{label: coefficient}`. Plain-object labels are ordered numerically when
/// every label is an integer and lexicographically otherwise.
pub fn parse_functional(v: &Value) -> Result<Functional> {
    let obj = v
        .as_object()
        .ok_or_else(|| malformed("a functional must be a JSON object"))?;
    if obj.contains_key("labels") {
        let labels = parse_labels(obj.get("labels"))?;
        let coeffs = parse_row(
            obj.get("coefficients")
                .ok_or_else(|| malformed("missing array field `coefficients`"))?,
        )?;
        return Functional::new(&labels, coeffs);
    }
    let mut entries: Vec<(&String, &Value)> = obj.iter().collect();
    if entries.iter().all(|(k, _)| k.parse::<i64>().is_ok()) {
        entries.sort_by_key(|(k, _)| k.parse::<i64>().unwrap_or_default());
    }
    let labels = Labels::new(entries.iter().map(|(k, _)| k.to_string()))?;
    let coeffs = entries
        .iter()
        .map(|(_, v)| parse_rational_value(v))
        .collect::<Result<Vec<_>>>()?;
    Functional::new(&labels, coeffs)
}

pub fn parse_pl(v: &Value) -> Result<PLFunction> {
    let xs = parse_row(v.get("breakpoints").ok_or_else(|| malformed("missing `breakpoints`"))?)?;
    let ys = parse_row(v.get("values").ok_or_else(|| malformed("missing `values`"))?)?;
    PLFunction::new(xs, ys)
}

/// Full structural analysis of a subspace.
///
/// Operations that need a sublattice run on the sublattice generated by the
/// input; `analyzed` says whether that is the input itself.
pub fn analyze_report(y: &Subspace) -> Result<Value> {
    y.ensure_primal()?;
    let labels = y.labels();
    let closure = sublattice_closure(y)?;
    let is_sublattice = closure == *y;
    let witness = non_sublattice_witness(y)?
        .map(|(s, t)| json!({"s": labels.name(s), "t": labels.name(t)}));
    let clans = clan_decomposition(&closure, true)?;
    let m = closure.codimension();
    let n = closure.ambient_dim();
    let largest = largest_ideal_in(&closure)?;
    let census = unit_vector_census(&closure)?;
    let (lower, upper) = unit_vector_bounds(n, m);
    let quotient = match quotient_by_ideal(&largest) {
        Ok(q) => json!({
            "labels": q.lattice.labels().names(),
            "map": matrix_json(&q.map),
        }),
        Err(Error::DegenerateQuotient) => Value::Null,
        Err(e) => return Err(e),
    };
    let oracle_closure = oracle::generated_by_rows(labels, y.basis())?;

    Ok(json!({
        "labels": labels.names(),
        "basis": matrix_json(y.basis()),
        "dimension": y.dim(),
        "codimension": y.codimension(),
        "is_sublattice": is_sublattice,
        "non_sublattice_witness": witness,
        "sublattice_closure": subspace_json(&closure),
        "oracle_agrees": oracle_closure == closure,
        "is_ideal": is_ideal(y)?.as_ref().map(ideal_json),
        "analyzed": if is_sublattice { "input" } else { "closure" },
        "clan_decomposition": {
            "kernel": names(labels, &clans.kernel),
            "clans": clans.clans.iter().map(|c| names(labels, c)).collect::<Vec<_>>(),
            "generators": clans.generators.iter().map(vector_json).collect::<Vec<_>>(),
        },
        "disjoint_positive_basis": clans.generators.iter().map(vector_json).collect::<Vec<_>>(),
        "constraint_set": constraints_json(constraint_set(y)?.constraints(), labels),
        "codim1_factorization": constraints_json(&factor_into_codim1(&closure)?, labels),
        "largest_ideal": {
            "zero_set": largest.zero_set_names(),
            "codimension": largest.codimension(),
            "bound": 2 * m,
            "within_bound": largest.codimension() <= 2 * m,
        },
        "unit_vector_census": {
            "count": census,
            "lower": lower,
            "upper": upper,
            "within_bounds": lower <= census && census <= upper,
        },
        "quotient": quotient,
    }))
}

fn witness_json(w: &FullnessWitness) -> Value {
    json!({
        "s": w.x.labels().name(w.s),
        "t": w.x.labels().name(w.t),
        "x": vector_json(&w.x),
        "y": vector_json(&w.y),
        "alpha": rational_json(&w.alpha),
        "beta": rational_json(&w.beta),
        "lower": vector_json(&w.lower),
        "upper": vector_json(&w.upper),
        "z": vector_json(&w.z),
    })
}

/// Classification of a functional plus an independent check of its kernel.
pub fn classify_report(phi: &Functional) -> Result<Value> {
    let c = classify(phi);
    let (kernel, degenerate) = kernel_subspace(phi);
    let kernel_is_sublattice = sublattice_closure(&kernel)? == kernel;
    let kernel_is_ideal = is_ideal(&kernel)?.is_some();
    let (fullness, witness) = if degenerate {
        (Value::Null, Value::Null)
    } else {
        let (full, w) = is_full_codim1(phi)?;
        let verified = match &w {
            Some(w) => w.verify(phi)?,
            None => true,
        };
        (
            json!(full),
            w.map_or(Value::Null, |w| {
                let mut j = witness_json(&w);
                j["verified"] = json!(verified);
                j
            }),
        )
    };
    let sign_definite = c.is_positive || c.is_negative;
    let negated_homomorphism = classify(&crate::lattice::FiniteVectorLattice::new(phi.labels().clone())
        .functional(phi.coeffs().iter().map(|a| -a.clone()).collect())?)
    .is_lattice_homomorphism;
    Ok(json!({
        "functional": functional_json(phi),
        "classification": {
            "is_positive": c.is_positive,
            "is_negative": c.is_negative,
            "is_lattice_homomorphism": c.is_lattice_homomorphism,
            "is_diff_of_two_homomorphisms": c.is_diff_of_two_homomorphisms,
            "is_disjointness_preserving": c.is_disjointness_preserving,
            "support_size": c.support_size,
            "homomorphism_parts": c.homomorphism_parts.as_ref().map(|(p, m)| json!({
                "plus": functional_json(p),
                "minus": functional_json(m),
            })),
        },
        "kernel": {
            "basis": matrix_json(kernel.basis()),
            "codimension": kernel.codimension(),
            "degenerate": degenerate,
            "is_sublattice": kernel_is_sublattice,
            "is_ideal": kernel_is_ideal,
            "is_full": fullness,
        },
        "fullness_witness": witness,
        "max_disjoint_nonvanishing": max_disjoint_nonvanishing(phi),
        "cross_check": {
            "sublattice_iff_diff_of_homomorphisms": kernel_is_sublattice == c.is_diff_of_two_homomorphisms,
            "ideal_iff_homomorphism": kernel_is_ideal == (c.is_lattice_homomorphism || negated_homomorphism),
            "full_iff_sign_definite": degenerate || fullness == json!(sign_definite),
        },
    }))
}

/// The non-closed ideal certificate for a given `n`.
pub fn pl_demo_report(n: u64) -> Result<Value> {
    let w = counterexample_witness(n)?;
    let f0 = PLFunction::identity();
    let distance = pl_e_norm(&f0.sub(&w), &PLFunction::one())?;
    let expected = ENorm::Finite(Rational::new(1.into(), n.into()));
    Ok(json!({
        "n": n,
        "f0": pl_json(&f0),
        "witness": pl_json(&w),
        "witness_in_ideal": w.vanishes_near_zero(),
        "witness_vanishes_up_to": rational_json(&w.breakpoints()[1]),
        "f0_in_ideal": f0.vanishes_near_zero(),
        "f0_vanishes_at_zero": f0.values()[0] == Rational::from_integer(0.into()),
        "distance": norm_json(&distance),
        "certificate_holds": distance == expected && w.vanishes_near_zero(),
    }))
}

/// Renders a report as `key: value` lines, one per top-level field.
pub fn to_text(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect(),
        other => format!("{other}\n"),
    }
}
