//! Browser bindings. Each exported function takes and returns plain strings so
//! the page needs no generated glue beyond `wasm-bindgen`'s.
//!
//! The `*_json`/`*_svg` functions hold the logic and run natively in tests;
//! the `#[wasm_bindgen]` wrappers only convert errors to JS exceptions.

use stateogram::{dj_circuit, parse_circuit, render_svg, run_circuit, serialize_circuit, Circuit, Oracle, RenderStyle, TraceDocument};
use wasm_bindgen::prelude::*;

/// Largest register the page will simulate.
pub const MAX_DEMO_QUBITS: usize = 12;

fn load(circuit_json: &str) -> Result<Circuit, String> {
    let circuit = parse_circuit(circuit_json).map_err(|e| e.to_string())?;
    if circuit.n_qubits() > MAX_DEMO_QUBITS {
        return Err(format!(
            "{} qubits exceeds the demo limit of {MAX_DEMO_QUBITS}",
            circuit.n_qubits()
        ));
    }
    Ok(circuit)
}

/// Trace document JSON for a circuit document.
pub fn simulate_json(circuit_json: &str) -> Result<String, String> {
    Ok(TraceDocument::for_circuit(&load(circuit_json)?).to_json())
}

/// SVG of trace step `step`, drawn `width` by `height` pixels.
pub fn render_step_svg(circuit_json: &str, step: usize, width: u32, height: u32) -> Result<String, String> {
    let circuit = load(circuit_json)?;
    let mut steps = run_circuit(&circuit);
    if step >= steps.len() {
        return Err(format!("step {step} out of range: the trace has {} step(s)", steps.len()));
    }
    let style = RenderStyle {
        width_px: width,
        height_px: height,
        ..RenderStyle::default()
    };
    render_svg(&steps.swap_remove(step).layout, &style).map_err(|e| e.to_string())
}

/// Circuit document for the Deutsch-Jozsa circuit on `n_qubits` qubits.
/// `kind` is `"constant0"`, `"constant1"` or `"balanced"`; `mask` and
/// `negate` apply to the balanced kind only.
pub fn dj_preset_json(kind: &str, mask: u32, negate: bool, n_qubits: usize) -> Result<String, String> {
    let oracle = match kind {
        "constant0" => Oracle::Constant0,
        "constant1" => Oracle::Constant1,
        "balanced" => Oracle::Balanced {
            mask: u64::from(mask),
            negate,
        },
        other => return Err(format!("unknown oracle kind {other:?}")),
    };
    if n_qubits > MAX_DEMO_QUBITS {
        return Err(format!("{n_qubits} qubits exceeds the demo limit of {MAX_DEMO_QUBITS}"));
    }
    dj_circuit(oracle, n_qubits)
        .map(|c| serialize_circuit(&c))
        .map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn simulate(circuit_json: &str) -> Result<String, JsError> {
    simulate_json(circuit_json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = renderStep)]
pub fn render_step(circuit_json: &str, step: usize, width: u32, height: u32) -> Result<String, JsError> {
    render_step_svg(circuit_json, step, width, height).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = djPreset)]
pub fn dj_preset(kind: &str, mask: u32, negate: bool, n_qubits: usize) -> Result<String, JsError> {
    dj_preset_json(kind, mask, negate, n_qubits).map_err(|e| JsError::new(&e))
}
