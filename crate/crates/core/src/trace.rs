//! Trace documents: a circuit plus the state and layout after every column.

use serde::{Deserialize, Serialize};

use crate::circuit::{run_circuit, Circuit, TraceStep};
use crate::format::CircuitDocument;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    pub circuit: CircuitDocument,
    pub steps: Vec<TraceStep>,
}

impl TraceDocument {
    pub fn for_circuit(c: &Circuit) -> Self {
        Self {
            circuit: CircuitDocument::from(c),
            steps: run_circuit(c),
        }
    }

    /// Canonical compact JSON (fixed key order, shortest round-trip floats).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace documents always serialize")
    }
}
