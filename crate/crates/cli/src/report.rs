//! JSON and CSV rendering helpers.

use chrono::{DateTime, SecondsFormat, Utc};
use num_rational::BigRational;
use serde_json::{json, Value};
use trace_atlas::potential::{EnergyEstimate, MahlerEstimate};
use trace_atlas::realroots::RootMultiset;
use trace_atlas::tolerances::*;
use trace_atlas::IntPolynomial;

use crate::Context;

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Tool version, timestamp and the tolerances compiled into the library.
pub fn provenance(ctx: &Context) -> Value {
    let when = match ctx.timestamp {
        Some(secs) => DateTime::<Utc>::from_timestamp(secs, 0).unwrap_or_default(),
        None => Utc::now(),
    };
    json!({
        "tool": "trace-atlas",
        "version": env!("CARGO_PKG_VERSION"),
        "timestamp": when.to_rfc3339_opts(SecondsFormat::Secs, true),
        "threads": ctx.threads.unwrap_or_else(rayon::current_num_threads),
        "tolerances": {
            "root_eps": DEFAULT_ROOT_EPS,
            "root_eps_above_degree_64": RELAXED_ROOT_EPS,
            "sturm_reconcile_max_degree": STURM_RECONCILE_MAX_DEGREE,
            "real_atom": REAL_ATOM_TOL,
            "exceptional_radius": EXCEPTIONAL_RADIUS_TOL,
            "unit_capacity": CAPACITY_ONE_TOL,
            "mass": MASS_TOL,
            "symmetry": SYMMETRY_TOL,
            "quadrature_nodes": QUADRATURE_NODES,
        },
    })
}

pub fn envelope(command: &str, inputs: &Value, results: Value, ctx: &Context) -> String {
    pretty(&json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "provenance": provenance(ctx),
    }))
}

pub fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

/// Degree-ascending coefficient text, the same format the CLI reads.
pub fn coeffs(p: &IntPolynomial) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn polynomial(p: &IntPolynomial) -> Value {
    json!({ "coeffs": coeffs(p), "pretty": p.to_pretty(), "degree": p.degree() })
}

pub fn roots(r: &RootMultiset) -> Value {
    Value::Array(
        r.iter()
            .map(|(z, radius, real)| json!({ "re": z.re + 0.0, "im": z.im + 0.0, "radius": radius, "real": real }))
            .collect(),
    )
}

pub fn mahler(m: &MahlerEstimate) -> Value {
    json!({
        "value": m.value,
        "log_value": m.log_value,
        "error": m.error,
        "roots_outside": m.roots_outside,
        "sturm_checked": m.sturm_checked,
    })
}

pub fn energy(e: &EnergyEstimate) -> Value {
    json!({ "value": e.value, "error": e.error, "atoms_inside": e.atoms_inside })
}

/// `(m, q)` pairs as an object keyed by `m`.
pub fn by_order(pairs: &[(usize, BigRational)]) -> Value {
    Value::Object(pairs.iter().map(|(m, q)| (m.to_string(), rational(q))).collect())
}

pub fn csv_text<F>(write: F) -> String
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}
