//! Deutsch-Jozsa circuits.
//!
//! Qubit 0 receives the function value; qubits `1..n` hold the argument
//! `a = Σ_{i≥1} x_i·2^(i-1)`. The oracle maps `|a⟩|x_0⟩ → |a⟩|x_0 ⊕ f(a)⟩`.

use thiserror::Error;

use crate::circuit::Circuit;
use crate::gate::Gate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Oracle {
    /// `f ≡ 0`
    Constant0,
    /// `f ≡ 1`
    Constant1,
    /// `f(a) = parity(a & mask) ⊕ negate`, balanced for any nonzero mask.
    Balanced { mask: u64, negate: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("Deutsch-Jozsa needs at least 2 qubits, got {n_qubits}")]
    TooFewQubits { n_qubits: usize },
    #[error("balanced oracle mask must be nonzero (mask 0 is a constant function)")]
    ZeroMask,
    #[error("mask {mask:#b} has bits beyond the {arg_bits}-bit argument register")]
    MaskTooWide { mask: u64, arg_bits: usize },
}

impl Oracle {
    /// The boolean function this oracle computes.
    pub fn eval(&self, arg: u64) -> bool {
        match *self {
            Oracle::Constant0 => false,
            Oracle::Constant1 => true,
            Oracle::Balanced { mask, negate } => ((arg & mask).count_ones() % 2 == 1) ^ negate,
        }
    }

    pub fn is_constant(&self) -> bool {
        !matches!(self, Oracle::Balanced { .. })
    }

    fn check(&self, n_qubits: usize) -> Result<(), OracleError> {
        if n_qubits < 2 {
            return Err(OracleError::TooFewQubits { n_qubits });
        }
        if let Oracle::Balanced { mask, .. } = *self {
            let arg_bits = n_qubits - 1;
            if mask == 0 {
                return Err(OracleError::ZeroMask);
            }
            if arg_bits < 64 && mask >> arg_bits != 0 {
                return Err(OracleError::MaskTooWide { mask, arg_bits });
            }
        }
        Ok(())
    }

    /// Every constant and parity-balanced oracle on `arg_bits` argument bits.
    pub fn all(arg_bits: usize) -> Vec<Oracle> {
        let mut out = vec![Oracle::Constant0, Oracle::Constant1];
        for mask in 1..(1u64 << arg_bits) {
            for negate in [false, true] {
                out.push(Oracle::Balanced { mask, negate });
            }
        }
        out
    }
}

/// Oracle columns: nothing for `f ≡ 0`, `X` on qubit 0 for `f ≡ 1`, and for a
/// balanced mask one CNOT per set mask bit (argument qubit → qubit 0) plus a
/// trailing `X` on qubit 0 when negated.
pub fn dj_oracle(oracle: Oracle, n_qubits: usize) -> Result<Vec<Vec<Gate>>, OracleError> {
    oracle.check(n_qubits)?;
    let columns = match oracle {
        Oracle::Constant0 => vec![],
        Oracle::Constant1 => vec![vec![Gate::x(0)]],
        Oracle::Balanced { mask, negate } => {
            // each CNOT shares target 0, so each needs its own column
            let mut cols: Vec<Vec<Gate>> = (1..n_qubits)
                .filter(|i| mask >> (i - 1) & 1 == 1)
                .map(|i| vec![Gate::cnot(i, 0).expect("distinct qubits")])
                .collect();
            if negate {
                cols.push(vec![Gate::x(0)]);
            }
            cols
        }
    };
    Ok(columns)
}

/// `init = |0…01⟩`, Hadamard on every qubit, the oracle, then Hadamard on the
/// argument qubits.
pub fn dj_circuit(oracle: Oracle, n_qubits: usize) -> Result<Circuit, OracleError> {
    let mut columns = vec![(0..n_qubits).map(Gate::h).collect::<Vec<_>>()];
    columns.extend(dj_oracle(oracle, n_qubits)?);
    columns.push((1..n_qubits).map(Gate::h).collect());
    let mut init = vec![0; n_qubits];
    init[0] = 1;
    Ok(Circuit::new(n_qubits, init, columns).expect("well-formed Deutsch-Jozsa circuit"))
}
