//! Gate set and the stride kernels that apply gates to a statevector in place.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::state::{Amplitude, QuantumState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    /// `diag(1, e^{iθ})`
    Phase(f64),
    /// targets: control, target
    Cnot,
    Cz,
    Swap,
    /// targets: control, control, target
    Ccnot,
}

impl GateKind {
    pub fn arity(&self) -> usize {
        match self {
            GateKind::Cnot | GateKind::Cz | GateKind::Swap => 2,
            GateKind::Ccnot => 3,
            _ => 1,
        }
    }

    /// Canonical (uppercase) name used by the circuit format.
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Y => "Y",
            GateKind::Z => "Z",
            GateKind::S => "S",
            GateKind::Sdg => "SDG",
            GateKind::T => "T",
            GateKind::Tdg => "TDG",
            GateKind::Phase(_) => "PHASE",
            GateKind::Cnot => "CNOT",
            GateKind::Cz => "CZ",
            GateKind::Swap => "SWAP",
            GateKind::Ccnot => "CCNOT",
        }
    }

    /// Case-insensitive lookup. `theta` is attached when the name is `phase`.
    pub fn from_name(name: &str, theta: f64) -> Option<GateKind> {
        let kind = match name.to_ascii_uppercase().as_str() {
            "H" => GateKind::H,
            "X" => GateKind::X,
            "Y" => GateKind::Y,
            "Z" => GateKind::Z,
            "S" => GateKind::S,
            "SDG" => GateKind::Sdg,
            "T" => GateKind::T,
            "TDG" => GateKind::Tdg,
            "PHASE" => GateKind::Phase(theta),
            "CNOT" => GateKind::Cnot,
            "CZ" => GateKind::Cz,
            "SWAP" => GateKind::Swap,
            "CCNOT" => GateKind::Ccnot,
            _ => return None,
        };
        Some(kind)
    }

    /// The 2×2 matrix `[[m00, m01], [m10, m11]]` of a single-qubit kind.
    pub fn single_qubit_matrix(&self) -> Option<[[Complex64; 2]; 2]> {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let m = match *self {
            GateKind::H => [[h, h], [h, -h]],
            GateKind::X => [[z, one], [one, z]],
            GateKind::Y => [[z, -i], [i, z]],
            GateKind::Z => [[one, z], [z, -one]],
            GateKind::S => [[one, z], [z, i]],
            GateKind::Sdg => [[one, z], [z, -i]],
            GateKind::T => [[one, z], [z, Complex64::from_polar(1.0, FRAC_PI_4)]],
            GateKind::Tdg => [[one, z], [z, Complex64::from_polar(1.0, -FRAC_PI_4)]],
            GateKind::Phase(theta) => [[one, z], [z, Complex64::from_polar(1.0, theta)]],
            _ => return None,
        };
        Some(m)
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateKind::Phase(theta) => write!(f, "PHASE({theta})"),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GateError {
    #[error("{kind} takes {expected} target(s), got {got}")]
    Arity {
        kind: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("qubit {qubit} appears more than once in the targets of {kind}")]
    DuplicateTarget { kind: &'static str, qubit: usize },
    #[error("phase angle must be finite")]
    NonFiniteTheta,
    #[error("{kind} targets qubit {qubit} but the register has {n_qubits} qubit(s)")]
    TargetOutOfRange {
        kind: &'static str,
        qubit: usize,
        n_qubits: usize,
    },
}

/// A gate placement: a kind plus its target qubits (controls first).
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    kind: GateKind,
    targets: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, targets: Vec<usize>) -> Result<Self, GateError> {
        if targets.len() != kind.arity() {
            return Err(GateError::Arity {
                kind: kind.name(),
                expected: kind.arity(),
                got: targets.len(),
            });
        }
        for (k, &q) in targets.iter().enumerate() {
            if targets[..k].contains(&q) {
                return Err(GateError::DuplicateTarget {
                    kind: kind.name(),
                    qubit: q,
                });
            }
        }
        if let GateKind::Phase(theta) = kind {
            if !theta.is_finite() {
                return Err(GateError::NonFiniteTheta);
            }
        }
        Ok(Self { kind, targets })
    }

    pub fn h(q: usize) -> Self {
        Self::single(GateKind::H, q)
    }

    pub fn x(q: usize) -> Self {
        Self::single(GateKind::X, q)
    }

    pub fn z(q: usize) -> Self {
        Self::single(GateKind::Z, q)
    }

    pub fn phase(theta: f64, q: usize) -> Result<Self, GateError> {
        Self::new(GateKind::Phase(theta), vec![q])
    }

    pub fn cnot(control: usize, target: usize) -> Result<Self, GateError> {
        Self::new(GateKind::Cnot, vec![control, target])
    }

    fn single(kind: GateKind, q: usize) -> Self {
        Self {
            kind,
            targets: vec![q],
        }
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn check_range(&self, n_qubits: usize) -> Result<(), GateError> {
        match self.targets.iter().find(|&&q| q >= n_qubits) {
            Some(&qubit) => Err(GateError::TargetOutOfRange {
                kind: self.kind.name(),
                qubit,
                n_qubits,
            }),
            None => Ok(()),
        }
    }

    /// Applies the gate in place. Targets must already be range-checked.
    pub(crate) fn apply_in_place(&self, amps: &mut [Amplitude]) {
        let t = &self.targets;
        match self.kind {
            GateKind::X => {
                let m = 1 << t[0];
                for_each_pair(amps.len(), m, |i, j| amps.swap(i, j));
            }
            GateKind::Z => scale_where_set(amps, 1 << t[0], |a| -a),
            GateKind::S => scale_where_set(amps, 1 << t[0], |a| Complex64::new(-a.im, a.re)),
            GateKind::Sdg => scale_where_set(amps, 1 << t[0], |a| Complex64::new(a.im, -a.re)),
            GateKind::Phase(theta) => {
                let f = Complex64::from_polar(1.0, theta);
                scale_where_set(amps, 1 << t[0], |a| a * f);
            }
            GateKind::T | GateKind::Tdg => {
                let f = self.kind.single_qubit_matrix().unwrap()[1][1];
                scale_where_set(amps, 1 << t[0], |a| a * f);
            }
            GateKind::H => {
                let m = 1 << t[0];
                for_each_pair(amps.len(), m, |i, j| {
                    let (a0, a1) = (amps[i], amps[j]);
                    amps[i] = (a0 + a1) * FRAC_1_SQRT_2;
                    amps[j] = (a0 - a1) * FRAC_1_SQRT_2;
                });
            }
            GateKind::Y => {
                let m = 1 << t[0];
                // |0⟩ → i|1⟩, |1⟩ → −i|0⟩
                for_each_pair(amps.len(), m, |i, j| {
                    let (a0, a1) = (amps[i], amps[j]);
                    amps[i] = Complex64::new(a1.im, -a1.re);
                    amps[j] = Complex64::new(-a0.im, a0.re);
                });
            }
            GateKind::Cnot => {
                let (c, m) = (1 << t[0], 1 << t[1]);
                for_each_pair(amps.len(), m, |i, j| {
                    if i & c != 0 {
                        amps.swap(i, j);
                    }
                });
            }
            GateKind::Cz => {
                let both = (1 << t[0]) | (1 << t[1]);
                scale_where_set(amps, both, |a| -a);
            }
            GateKind::Swap => {
                let (a, b) = (1 << t[0], 1 << t[1]);
                for i in 0..amps.len() {
                    if i & a != 0 && i & b == 0 {
                        amps.swap(i, i ^ a ^ b);
                    }
                }
            }
            GateKind::Ccnot => {
                let c = (1 << t[0]) | (1 << t[1]);
                let m = 1 << t[2];
                for_each_pair(amps.len(), m, |i, j| {
                    if i & c == c {
                        amps.swap(i, j);
                    }
                });
            }
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind, self.targets)
    }
}

/// Visits every index pair `(i, i | m)` with bit `m` clear in `i`, sweeping
/// blocks of stride `2m`.
#[inline]
fn for_each_pair(len: usize, m: usize, mut f: impl FnMut(usize, usize)) {
    let mut block = 0;
    while block < len {
        for i in block..block + m {
            f(i, i | m);
        }
        block += m << 1;
    }
}

#[inline]
fn scale_where_set(amps: &mut [Amplitude], mask: usize, f: impl Fn(Amplitude) -> Amplitude) {
    for (i, a) in amps.iter_mut().enumerate() {
        if i & mask == mask {
            *a = f(*a);
        }
    }
}

/// Returns `U·s` for the gate's unitary `U`; `s` is left untouched.
pub fn apply_gate(s: &QuantumState, g: &Gate) -> Result<QuantumState, GateError> {
    g.check_range(s.n_qubits())?;
    let mut out = s.clone();
    g.apply_in_place(out.amplitudes_mut());
    Ok(out)
}

/// Hadamard on every qubit.
pub fn hadamard_all(s: &QuantumState) -> QuantumState {
    let mut out = s.clone();
    for q in 0..s.n_qubits() {
        Gate::h(q).apply_in_place(out.amplitudes_mut());
    }
    out
}
