//! WebAssembly bindings for the browser demo. Every export returns a JSON
//! string; failures come back as `{"error": ...}`.

use num_bigint::BigInt;
use serde_json::{json, Value};
use torus_strata::classify::{classify, classify_components};
use torus_strata::document::load;
use torus_strata::lattice::det2;
use torus_strata::model::{build_canonical_complex, homology, interval_closed_form};
use torus_strata::{decide_iso, report, CharacteristicData, PrimitiveVector};
use wasm_bindgen::prelude::wasm_bindgen;

fn error(msg: impl std::fmt::Display) -> Value {
    json!({ "error": msg.to_string() })
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("`{s}` is not an integer"))
}

fn explore(a: &str, b: &str, c: &str, d: &str) -> Result<Value, String> {
    let v = PrimitiveVector::new(vec![parse_int(a)?, parse_int(b)?]).map_err(|e| e.to_string())?;
    let w = PrimitiveVector::new(vec![parse_int(c)?, parse_int(d)?]).map_err(|e| e.to_string())?;
    let data = CharacteristicData::interval(&v, &w).map_err(|e| e.to_string())?;
    let result = classify(&data).map_err(|e| e.to_string())?;
    let complex = build_canonical_complex(&data).map_err(|e| e.to_string())?;
    let closed = interval_closed_form(&v, &w).map_err(|e| e.to_string())?;
    Ok(json!({
        "determinant": report::int(&det2(&v, &w).map_err(|e| e.to_string())?),
        "classification": report::classification(&result),
        "homology": report::homology(&homology(&complex)),
        "closed_form": report::homology(&closed),
        "cells": complex.dims(),
    }))
}

/// Interval with end labels `(a, b)` and `(c, d)`; integers are passed as
/// decimal strings so that values beyond 2^53 survive the trip from JS.
pub fn interval_explorer_json(a: &str, b: &str, c: &str, d: &str) -> String {
    explore(a, b, c, d).unwrap_or_else(error).to_string()
}

pub fn classify_document_json(text: &str) -> String {
    let parsed = match load(text) {
        Ok(p) => p,
        Err(e) => {
            return json!({ "error": e.to_string(), "detail": report::document_error(&e) })
                .to_string()
        }
    };
    match classify_components(&parsed.data) {
        Ok(parts) => json!({
            "notes": parsed.notes,
            "components": parts.iter().map(report::classification).collect::<Vec<_>>(),
        })
        .to_string(),
        Err(e) => error(e).to_string(),
    }
}

pub fn compare_documents_json(left: &str, right: &str, weak: bool) -> String {
    let load_one = |side: &str, text: &str| load(text).map_err(|e| format!("{side}: {e}"));
    let out = load_one("left", left)
        .and_then(|a| load_one("right", right).map(|b| (a, b)))
        .and_then(|(a, b)| decide_iso(&a.data, &b.data, weak).map_err(|e| e.to_string()))
        .map(|v| report::verdict(&v))
        .unwrap_or_else(error);
    out.to_string()
}

#[wasm_bindgen]
pub fn interval_explorer(a: &str, b: &str, c: &str, d: &str) -> String {
    interval_explorer_json(a, b, c, d)
}

#[wasm_bindgen]
pub fn classify_document(text: &str) -> String {
    classify_document_json(text)
}

#[wasm_bindgen]
pub fn compare_documents(left: &str, right: &str, weak: bool) -> String {
    compare_documents_json(left, right, weak)
}
