//! Pure multi-qubit states over the computational basis.
//!
//! Basis index `b = Σ x_i·2^i`: qubit `i` is bit `i` of the index, and kets are
//! written most-significant qubit first (`|x_{n-1} … x_1 x_0⟩`).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A probability amplitude.
pub type Amplitude = Complex64;

/// Amplitudes whose probability falls below this are treated as absent.
pub const VANISH_THRESHOLD: f64 = 1e-9;

/// Tolerance on `Σ |a_b|² = 1` accepted when constructing a state.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Largest register the library will allocate (2^30 amplitudes = 16 GiB).
pub const MAX_QUBITS: usize = 30;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("register must have at least one qubit")]
    NoQubits,
    #[error("{n_qubits} qubits exceeds the supported maximum of {MAX_QUBITS}")]
    TooManyQubits { n_qubits: usize },
    #[error("basis index {index} out of range for {n_qubits} qubit(s)")]
    IndexOutOfRange { index: usize, n_qubits: usize },
    #[error("expected {expected} amplitudes for {n_qubits} qubit(s), got {got}")]
    LengthMismatch {
        n_qubits: usize,
        expected: usize,
        got: usize,
    },
    #[error("state is not normalized: total probability {total}")]
    NotNormalized { total: f64 },
    #[error("amplitude {index} is not finite")]
    NonFinite { index: usize },
    #[error("phase angle undefined for vanishing amplitude (probability {probability:e})")]
    UndefinedPhase { probability: f64 },
    #[error("qubit {qubit} out of range for {n_qubits} qubit(s)")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("qubit {qubit} listed more than once")]
    DuplicateQubit { qubit: usize },
    #[error("outcome has {got} bits but {expected} qubits were selected")]
    OutcomeLength { expected: usize, got: usize },
    #[error("outcome bit {bit} is not 0 or 1")]
    OutcomeBit { bit: u8 },
}

/// Measurement probability `re² + im²`.
pub fn probability(a: Amplitude) -> f64 {
    a.norm_sqr()
}

/// Argument of `a` in `(−π, π]`. A result of exactly `−π` is reported as `π`.
pub fn phase_angle(a: Amplitude) -> Result<f64, StateError> {
    let p = probability(a);
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(p >= VANISH_THRESHOLD) {
        return Err(StateError::UndefinedPhase { probability: p });
    }
    Ok(normalize_angle(a.im.atan2(a.re)))
}

pub(crate) fn normalize_angle(theta: f64) -> f64 {
    if theta <= -PI {
        PI
    } else {
        theta
    }
}

pub(crate) fn check_n_qubits(n_qubits: usize) -> Result<(), StateError> {
    if n_qubits == 0 {
        Err(StateError::NoQubits)
    } else if n_qubits > MAX_QUBITS {
        Err(StateError::TooManyQubits { n_qubits })
    } else {
        Ok(())
    }
}

/// A normalized vector of `2^n` amplitudes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "StateJson", try_from = "StateJson")]
pub struct QuantumState {
    n_qubits: usize,
    amplitudes: Vec<Amplitude>,
}

impl QuantumState {
    /// The computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self, StateError> {
        check_n_qubits(n_qubits)?;
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(StateError::IndexOutOfRange { index, n_qubits });
        }
        let mut amplitudes = vec![Amplitude::new(0.0, 0.0); dim];
        amplitudes[index] = Amplitude::new(1.0, 0.0);
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Builds a state from explicit amplitudes, checking length and normalization.
    pub fn from_amplitudes(n_qubits: usize, amplitudes: Vec<Amplitude>) -> Result<Self, StateError> {
        check_n_qubits(n_qubits)?;
        let expected = 1usize << n_qubits;
        if amplitudes.len() != expected {
            return Err(StateError::LengthMismatch {
                n_qubits,
                expected,
                got: amplitudes.len(),
            });
        }
        if let Some(index) = amplitudes
            .iter()
            .position(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(StateError::NonFinite { index });
        }
        let total: f64 = amplitudes.iter().map(|a| probability(*a)).sum();
        if (total - 1.0).abs() > NORM_TOLERANCE {
            return Err(StateError::NotNormalized { total });
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// Skips the normalization check; used by the gate kernels, which are unitary.
    pub(crate) fn from_raw(n_qubits: usize, amplitudes: Vec<Amplitude>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << n_qubits);
        Self {
            n_qubits,
            amplitudes,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Option<Amplitude> {
        self.amplitudes.get(index).copied()
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Amplitude] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Amplitude> {
        self.amplitudes
    }

    pub fn total_probability(&self) -> f64 {
        self.amplitudes.iter().map(|a| probability(*a)).sum()
    }

    /// Probability that measuring `qubits` yields `outcome` (`outcome[k]` is the
    /// bit read from `qubits[k]`), summed over every other qubit.
    pub fn marginal_probability(&self, qubits: &[usize], outcome: &[u8]) -> Result<f64, StateError> {
        if qubits.len() != outcome.len() {
            return Err(StateError::OutcomeLength {
                expected: qubits.len(),
                got: outcome.len(),
            });
        }
        let mut mask = 0usize;
        let mut want = 0usize;
        for (&q, &bit) in qubits.iter().zip(outcome) {
            if q >= self.n_qubits {
                return Err(StateError::QubitOutOfRange {
                    qubit: q,
                    n_qubits: self.n_qubits,
                });
            }
            if mask & (1 << q) != 0 {
                return Err(StateError::DuplicateQubit { qubit: q });
            }
            if bit > 1 {
                return Err(StateError::OutcomeBit { bit });
            }
            mask |= 1 << q;
            want |= (bit as usize) << q;
        }
        Ok(self
            .amplitudes
            .iter()
            .enumerate()
            .filter(|(b, _)| b & mask == want)
            .map(|(_, a)| probability(*a))
            .sum())
    }
}

/// `|index⟩` on `n_qubits` qubits.
pub fn basis_state(n_qubits: usize, index: usize) -> Result<QuantumState, StateError> {
    QuantumState::basis(n_qubits, index)
}

/// Wire form: `{"n": <int>, "amps": [[re, im], ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateJson {
    n: usize,
    amps: Vec<[f64; 2]>,
}

impl From<QuantumState> for StateJson {
    fn from(s: QuantumState) -> Self {
        StateJson {
            n: s.n_qubits,
            amps: s.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

impl TryFrom<StateJson> for QuantumState {
    type Error = StateError;

    fn try_from(j: StateJson) -> Result<Self, Self::Error> {
        let amps = j.amps.into_iter().map(|[re, im]| Amplitude::new(re, im)).collect();
        QuantumState::from_amplitudes(j.n, amps)
    }
}
