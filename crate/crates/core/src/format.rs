//! The `.sogc.json` circuit document.
//!
//! ```json
//! {"version":"1","qubits":1,"init":[0],"columns":[[{"gate":"H","targets":[0]}]]}
//! ```
//!
//! Gate names are matched case-insensitively and written uppercase. Unknown
//! keys are rejected. `theta` (radians) is required for `PHASE` and refused
//! elsewhere.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circuit::{Circuit, CircuitError};
use crate::gate::{Gate, GateKind};

pub const FORMAT_VERSION: &str = "1";
pub const FILE_EXTENSION: &str = ".sogc.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateRecord {
    pub gate: String,
    pub targets: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDocument {
    pub version: String,
    pub qubits: usize,
    pub init: Vec<u8>,
    pub columns: Vec<Vec<GateRecord>>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format version {0:?} (expected \"1\")")]
    Version(String),
    #[error("column {column}: unknown gate {name:?}")]
    UnknownGate { column: usize, name: String },
    #[error("column {column}: gate PHASE requires theta")]
    MissingTheta { column: usize },
    #[error("column {column}: gate {gate} does not take theta")]
    UnexpectedTheta { column: usize, gate: &'static str },
    #[error("column {column}: theta must be finite")]
    NonFiniteTheta { column: usize },
    #[error(transparent)]
    Invalid(#[from] CircuitError),
}

impl FormatError {
    /// `(line, column)` of a syntax error.
    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            FormatError::Syntax { line, column, .. } => Some((*line, *column)),
            _ => None,
        }
    }

    /// Circuit column a semantic error refers to.
    pub fn circuit_column(&self) -> Option<usize> {
        match self {
            FormatError::UnknownGate { column, .. }
            | FormatError::MissingTheta { column }
            | FormatError::UnexpectedTheta { column, .. }
            | FormatError::NonFiniteTheta { column } => Some(*column),
            FormatError::Invalid(e) => e.column(),
            _ => None,
        }
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; keep the bare message
        let message = match message.rfind(" at line ") {
            Some(k) => message[..k].to_string(),
            None => message,
        };
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message,
        }
    }
}

impl CircuitDocument {
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Canonical compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn to_circuit(&self) -> Result<Circuit, FormatError> {
        if self.version != FORMAT_VERSION {
            return Err(FormatError::Version(self.version.clone()));
        }
        let mut columns = Vec::with_capacity(self.columns.len());
        for (column, records) in self.columns.iter().enumerate() {
            let mut gates = Vec::with_capacity(records.len());
            for r in records {
                let kind = GateKind::from_name(&r.gate, r.theta.unwrap_or(0.0)).ok_or_else(|| {
                    FormatError::UnknownGate {
                        column,
                        name: r.gate.clone(),
                    }
                })?;
                match (kind, r.theta) {
                    (GateKind::Phase(_), None) => return Err(FormatError::MissingTheta { column }),
                    (GateKind::Phase(t), Some(_)) if !t.is_finite() => {
                        return Err(FormatError::NonFiniteTheta { column })
                    }
                    (GateKind::Phase(_), Some(_)) | (_, None) => {}
                    (other, Some(_)) => {
                        return Err(FormatError::UnexpectedTheta {
                            column,
                            gate: other.name(),
                        })
                    }
                }
                let gate = Gate::new(kind, r.targets.clone())
                    .map_err(|source| CircuitError::Gate { column, source })?;
                gates.push(gate);
            }
            columns.push(gates);
        }
        Ok(Circuit::new(self.qubits, self.init.clone(), columns)?)
    }
}

impl From<&Circuit> for CircuitDocument {
    fn from(c: &Circuit) -> Self {
        CircuitDocument {
            version: FORMAT_VERSION.to_string(),
            qubits: c.n_qubits(),
            init: c.init().to_vec(),
            columns: c
                .columns()
                .iter()
                .map(|col| {
                    col.iter()
                        .map(|g| GateRecord {
                            gate: g.kind().name().to_string(),
                            targets: g.targets().to_vec(),
                            theta: match g.kind() {
                                GateKind::Phase(t) => Some(t),
                                _ => None,
                            },
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Parses and validates a circuit document.
pub fn parse_circuit(text: &str) -> Result<Circuit, FormatError> {
    CircuitDocument::from_json(text)?.to_circuit()
}

/// Canonical text of a circuit: fixed key order, compact, uppercase gate names.
pub fn serialize_circuit(c: &Circuit) -> String {
    CircuitDocument::from(c).to_json()
}
