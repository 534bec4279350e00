//! Circuits as ordered columns of simultaneous gates, and column-by-column simulation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gate::{Gate, GateError};
use crate::layout::{compute_layout, StateogramLayout};
use crate::state::{check_n_qubits, QuantumState, StateError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CircuitError {
    #[error(transparent)]
    Register(#[from] StateError),
    #[error("init has {got} bit(s) but the circuit has {n_qubits} qubit(s)")]
    InitLength { n_qubits: usize, got: usize },
    #[error("init bit for qubit {qubit} is {value}, expected 0 or 1")]
    InitBit { qubit: usize, value: u8 },
    #[error("column {column}: {source}")]
    Gate {
        column: usize,
        #[source]
        source: GateError,
    },
    #[error("column {column}: qubit {qubit} is used by more than one gate")]
    QubitConflict { column: usize, qubit: usize },
}

impl CircuitError {
    /// Column the error refers to, when it is tied to one.
    pub fn column(&self) -> Option<usize> {
        match self {
            CircuitError::Gate { column, .. } | CircuitError::QubitConflict { column, .. } => {
                Some(*column)
            }
            _ => None,
        }
    }
}

/// A validated circuit: `n_qubits` wires, classical initial bits and gate columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    init: Vec<u8>,
    columns: Vec<Vec<Gate>>,
}

impl Circuit {
    pub fn new(n_qubits: usize, init: Vec<u8>, columns: Vec<Vec<Gate>>) -> Result<Self, CircuitError> {
        check_n_qubits(n_qubits)?;
        if init.len() != n_qubits {
            return Err(CircuitError::InitLength {
                n_qubits,
                got: init.len(),
            });
        }
        if let Some((qubit, &value)) = init.iter().enumerate().find(|(_, &v)| v > 1) {
            return Err(CircuitError::InitBit { qubit, value });
        }
        for (column, gates) in columns.iter().enumerate() {
            validate_column(column, gates, n_qubits)?;
        }
        Ok(Self {
            n_qubits,
            init,
            columns,
        })
    }

    /// All qubits start in `|0⟩`.
    pub fn zeroed(n_qubits: usize, columns: Vec<Vec<Gate>>) -> Result<Self, CircuitError> {
        Self::new(n_qubits, vec![0; n_qubits], columns)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn init(&self) -> &[u8] {
        &self.init
    }

    pub fn columns(&self) -> &[Vec<Gate>] {
        &self.columns
    }

    /// `Σ init_i · 2^i`
    pub fn init_index(&self) -> usize {
        self.init
            .iter()
            .enumerate()
            .map(|(i, &bit)| (bit as usize) << i)
            .sum()
    }

    pub fn initial_state(&self) -> QuantumState {
        QuantumState::basis(self.n_qubits, self.init_index()).expect("validated register")
    }

    /// States after each column, starting with the initial state (`C + 1` entries).
    pub fn states(&self) -> Vec<QuantumState> {
        let mut state = self.initial_state();
        let mut out = Vec::with_capacity(self.columns.len() + 1);
        out.push(state.clone());
        for column in &self.columns {
            let amps = state.amplitudes_mut();
            for gate in column {
                gate.apply_in_place(amps);
            }
            out.push(state.clone());
        }
        out
    }
}

fn validate_column(column: usize, gates: &[Gate], n_qubits: usize) -> Result<(), CircuitError> {
    let mut used = vec![false; n_qubits];
    for gate in gates {
        gate.check_range(n_qubits)
            .map_err(|source| CircuitError::Gate { column, source })?;
        for &q in gate.targets() {
            if std::mem::replace(&mut used[q], true) {
                return Err(CircuitError::QubitConflict { column, qubit: q });
            }
        }
    }
    Ok(())
}

/// One snapshot of a simulation: `column_index` 0 is the state before any column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceStep {
    pub column_index: usize,
    pub state: QuantumState,
    pub layout: StateogramLayout,
}

/// Simulates `c` column by column and lays out every intermediate state.
pub fn run_circuit(c: &Circuit) -> Vec<TraceStep> {
    c.states()
        .into_iter()
        .enumerate()
        .map(|(column_index, state)| {
            let layout = compute_layout(&state);
            TraceStep {
                column_index,
                state,
                layout,
            }
        })
        .collect()
}
