//! Browser bindings: classify a model file, reduce it at a prime, build a twist.
//! Every function returns a JSON string; failures carry an `error` object.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use extremal::arith::Ring;
use extremal::catalog::x11_family;
use extremal::cli::{parse_model_file, parse_prime, render_model_file, ParseError};
use extremal::fibers::{fiber_configuration, local_data};
use extremal::models::{check_prime, reduce_at_prime};
use extremal::{TwistSeed, WeierstrassModel};

fn parse_failure(e: &ParseError) -> Value {
    json!({ "error": { "line": e.line, "column": e.column, "message": e.message } })
}

fn failure(message: impl ToString) -> Value {
    json!({ "error": { "message": message.to_string() } })
}

fn describe(m: &WeierstrassModel) -> Value {
    let mut out = json!({
        "ring": m.ring().to_string(),
        "discriminant": m.discriminant().to_string(),
    });
    match m.j_invariant() {
        Ok(j) => out["j"] = json!(j.to_string()),
        Err(e) => return merge(out, failure(e)),
    }
    let fibers = match local_data(m) {
        Ok(d) => d,
        Err(e) => return merge(out, failure(e)),
    };
    out["fibers"] = fibers
        .iter()
        .map(|d| json!({ "place": d.place.to_string(), "type": d.kodaira.to_string(), "v_delta": d.v_delta }))
        .collect();
    match fiber_configuration(m) {
        Ok(c) => {
            out["configuration"] = json!(c.to_string());
            out["extremal"] = json!(c.extremal);
            out["mw_order"] = json!(c.mw_order);
        }
        Err(e) => return merge(out, failure(e)),
    }
    out
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Some(a), Value::Object(b)) = (a.as_object_mut(), b) {
        a.extend(b);
    }
    a
}

pub fn classify_json(text: &str) -> Value {
    match parse_model_file(text) {
        Ok(f) => merge(json!({ "name": f.name }), describe(&f.model)),
        Err(e) => parse_failure(&e),
    }
}

pub fn reduce_json(text: &str, prime: &str) -> Value {
    let f = match parse_model_file(text) {
        Ok(f) => f,
        Err(e) => return parse_failure(&e),
    };
    let primes = match parse_prime(f.model.ring(), prime) {
        Ok(p) => p,
        Err(e) => return failure(e),
    };
    let mut out = Vec::new();
    for p in primes {
        let reduced = match reduce_at_prime(&f.model, &p) {
            Ok(r) => r,
            Err(e) => return failure(e),
        };
        let report = match check_prime(&f.model, &p) {
            Ok(r) => r,
            Err(e) => return failure(e),
        };
        out.push(json!({
            "prime": p.label(),
            "residue_field": p.residue_field().to_string(),
            "model": render_model_file(&reduced, None, None),
            "verdict": report.verdict.to_string(),
            "good": report.verdict.is_good(),
            "configuration": report.configuration.as_ref().map(|c| c.to_string()),
            "extremal": report.extremal,
            "mw_order": report.mw_order,
        }));
    }
    json!({ "reductions": out })
}

pub fn twist_json(g: [i64; 5]) -> Value {
    let seed = match TwistSeed::from_ints(&Ring::integers(), g) {
        Ok(s) => s,
        Err(e) => return failure(e),
    };
    let e = x11_family(&seed);
    let delta_ok = e.model.discriminant() == e.expected_delta;
    let j_ok = e.model.j_invariant().ok().and_then(|j| j.constant()) == Some(e.expected_j.clone());
    merge(
        json!({ "model": render_model_file(&e.model, Some("X_11(j)"), None), "delta_matches": delta_ok, "j_matches": j_ok }),
        describe(&e.model),
    )
}

#[wasm_bindgen]
pub fn classify(text: &str) -> String {
    classify_json(text).to_string()
}

#[wasm_bindgen]
pub fn reduce(text: &str, prime: &str) -> String {
    reduce_json(text, prime).to_string()
}

#[wasm_bindgen]
pub fn twist(g1: i32, g2: i32, g3: i32, g4: i32, g6: i32) -> String {
    twist_json([g1, g2, g3, g4, g6].map(i64::from)).to_string()
}
