//! JSON-in, JSON-out entry points for the browser page.
//!
//! Every function returns a JSON string: the result on success, or
//! `{"error": <tag>, "message": <text>}` on failure.

use std::collections::BTreeMap;

use pseudoherm::metric::{auto_case, metric_for_case};
use pseudoherm::sweep::{sweep, Axis, SweepSpec};
use pseudoherm::{classify, Branch, CMat2, CircleSign, Kind, Normalization, PhaseVector, Tolerances, C64};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

/// Browser sweeps stay small.
pub const MAX_DEMO_POINTS: usize = 20_000;

fn error(kind: &str, message: impl ToString) -> String {
    json!({ "error": kind, "message": message.to_string() }).to_string()
}

fn domain(e: pseudoherm::Error) -> String {
    error(e.kind(), e)
}

fn encode<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).unwrap_or_else(|e| error("SerializeError", e))
}

fn parse<T: for<'de> Deserialize<'de>>(what: &str, text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| error("ParseError", format!("{what}: {e}")))
}

pub fn classify_json(h: &str) -> String {
    let run = || -> Result<String, String> {
        let h: CMat2 = parse("h", h)?;
        classify(&h, &Tolerances::default()).map(|c| encode(&c)).map_err(domain)
    };
    run().unwrap_or_else(|e| e)
}

#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MetricOptions {
    pub kind: Option<Kind>,
    pub n1: Option<C64>,
    pub n2: Option<C64>,
    pub phi: Option<C64>,
    pub branch: Branch,
    pub circle: CircleSign,
}

/// `options` may be empty or `{}`; the case is chosen from `kind` or the classification.
pub fn metric_json(h: &str, options: &str) -> String {
    let run = || -> Result<String, String> {
        let h: CMat2 = parse("h", h)?;
        let o: MetricOptions = if options.trim().is_empty() {
            MetricOptions::default()
        } else {
            parse("options", options)?
        };
        let tol = Tolerances::default();
        let one = C64::new(1.0, 0.0);
        let n = Normalization::new(o.n1.unwrap_or(one), o.n2.unwrap_or(one)).map_err(domain)?;
        let pv = PhaseVector::new(o.phi.unwrap_or_default());
        let case = auto_case(&h, o.kind, &tol).map_err(domain)?;
        let m = metric_for_case(&h, &n, &pv, case, o.branch, o.circle, &tol).map_err(domain)?;
        Ok(encode(&m))
    };
    run().unwrap_or_else(|e| e)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRequest {
    pub entry: String,
    #[serde(default)]
    pub fixed: BTreeMap<String, C64>,
    #[serde(default)]
    pub axes: Vec<Axis>,
}

/// Returns `{"entry", "axes", "rows"}` with rows in lexicographic grid order.
pub fn sweep_json(request: &str) -> String {
    let run = || -> Result<String, String> {
        let r: SweepRequest = parse("request", request)?;
        let spec = SweepSpec::new(&r.entry, r.fixed, r.axes);
        let n = spec.validate().map_err(domain)?;
        if n > MAX_DEMO_POINTS {
            return Err(error("InvalidParameter", format!("grid has {n} points, the demo allows {MAX_DEMO_POINTS}")));
        }
        let rows = sweep(&spec, &Tolerances::default()).map_err(domain)?;
        let v: Value = json!({ "entry": spec.entry, "axes": spec.axes, "rows": rows });
        Ok(v.to_string())
    };
    run().unwrap_or_else(|e| e)
}

#[wasm_bindgen(js_name = classify)]
pub fn wasm_classify(h: &str) -> String {
    classify_json(h)
}

#[wasm_bindgen(js_name = metric)]
pub fn wasm_metric(h: &str, options: &str) -> String {
    metric_json(h, options)
}

#[wasm_bindgen(js_name = sweep)]
pub fn wasm_sweep(request: &str) -> String {
    sweep_json(request)
}
