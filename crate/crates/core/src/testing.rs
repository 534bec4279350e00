//! Random states and circuits for property tests.

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::circuit::Circuit;
use crate::gate::{Gate, GateKind};
use crate::state::{Amplitude, QuantumState};

/// Normalized state with independent uniform components. With probability
/// `sparsity` each amplitude is forced to exactly zero (at least one survives).
pub fn random_state<R: Rng>(rng: &mut R, n_qubits: usize, sparsity: f64) -> QuantumState {
    let dim = 1usize << n_qubits;
    loop {
        let mut amps: Vec<Amplitude> = (0..dim)
            .map(|_| {
                if rng.gen_bool(sparsity) {
                    Amplitude::new(0.0, 0.0)
                } else {
                    Amplitude::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                }
            })
            .collect();
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-3 {
            continue;
        }
        for a in &mut amps {
            *a /= norm;
        }
        if let Ok(s) = QuantumState::from_amplitudes(n_qubits, amps) {
            return s;
        }
    }
}

/// A gate kind drawn uniformly from the full gate set.
pub fn random_kind<R: Rng>(rng: &mut R, max_arity: usize) -> GateKind {
    let kinds = [
        GateKind::H,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::S,
        GateKind::Sdg,
        GateKind::T,
        GateKind::Tdg,
        GateKind::Phase(0.0),
        GateKind::Cnot,
        GateKind::Cz,
        GateKind::Swap,
        GateKind::Ccnot,
    ];
    loop {
        let kind = *kinds.choose(rng).unwrap();
        if kind.arity() > max_arity {
            continue;
        }
        return match kind {
            GateKind::Phase(_) => GateKind::Phase(rng.gen_range(-PI..PI)),
            k => k,
        };
    }
}

/// One column of gates on disjoint random qubits; may be empty.
pub fn random_column<R: Rng>(rng: &mut R, n_qubits: usize) -> Vec<Gate> {
    let mut free: Vec<usize> = (0..n_qubits).collect();
    free.shuffle(rng);
    let mut gates = Vec::new();
    while !free.is_empty() && rng.gen_bool(0.7) {
        let kind = random_kind(rng, free.len());
        let targets: Vec<usize> = free.drain(..kind.arity()).collect();
        gates.push(Gate::new(kind, targets).expect("distinct targets"));
    }
    gates
}

pub fn random_circuit<R: Rng>(rng: &mut R, n_qubits: usize, depth: usize) -> Circuit {
    let init = (0..n_qubits).map(|_| rng.gen_range(0..=1u8)).collect();
    let columns = (0..depth).map(|_| random_column(rng, n_qubits)).collect();
    Circuit::new(n_qubits, init, columns).expect("generated circuits are valid")
}
