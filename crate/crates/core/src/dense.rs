//! Reference simulator: every column becomes an explicit `2^n × 2^n` unitary
//! assembled from Kronecker products of 2×2 factors, applied by dense
//! matrix-vector multiplication. Slow on purpose; it shares no code with the
//! stride kernels in [`crate::gate`] and exists to cross-check them.

use num_complex::Complex64;
use thiserror::Error;

use crate::circuit::Circuit;
use crate::gate::{Gate, GateKind};
use crate::state::QuantumState;

/// Registers above this size are refused.
pub const MAX_DENSE_QUBITS: usize = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DenseError {
    #[error("dense reference simulation limited to {MAX_DENSE_QUBITS} qubits, circuit has {n_qubits}")]
    TooLarge { n_qubits: usize },
}

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { dim, data }
    }

    fn from_2x2(m: [[Complex64; 2]; 2]) -> Self {
        Self {
            dim: 2,
            data: vec![m[0][0], m[0][1], m[1][0], m[1][1]],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    /// `self ⊗ other`
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let dim = self.dim * other.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        data[(i * other.dim + k) * dim + j * other.dim + l] = a * other.get(k, l);
                    }
                }
            }
        }
        Matrix { dim, data }
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim);
        let dim = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..dim {
                    data[i * dim + j] += a * other.get(k, j);
                }
            }
        }
        Matrix { dim, data }
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.dim, v.len());
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    fn add_scaled(&mut self, other: &Matrix, scale: f64) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * scale;
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pauli_x() -> [[Complex64; 2]; 2] {
    [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]
}

fn pauli_y() -> [[Complex64; 2]; 2] {
    [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]
}

fn pauli_z() -> [[Complex64; 2]; 2] {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]
}

fn proj0() -> [[Complex64; 2]; 2] {
    [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]
}

fn proj1() -> [[Complex64; 2]; 2] {
    [[c(0.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]
}

/// `⊗_{q = n-1 … 0}` of the given per-qubit factors, identity elsewhere.
/// Qubit `n-1` is the leftmost factor since it is the most significant bit.
fn tensor(n_qubits: usize, factors: &[(usize, [[Complex64; 2]; 2])]) -> Matrix {
    let id = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    let mut out = Matrix::identity(1);
    for q in (0..n_qubits).rev() {
        let f = factors
            .iter()
            .find(|(fq, _)| *fq == q)
            .map(|(_, m)| *m)
            .unwrap_or(id);
        out = out.kron(&Matrix::from_2x2(f));
    }
    out
}

type Factor = (usize, [[Complex64; 2]; 2]);

/// Full-register unitary of one gate, written as a sum of tensor products.
pub fn gate_unitary(g: &Gate, n_qubits: usize) -> Matrix {
    let t = g.targets();
    let terms: Vec<(f64, Vec<Factor>)> = match g.kind() {
        GateKind::Cnot => vec![
            (1.0, vec![(t[0], proj0())]),
            (1.0, vec![(t[0], proj1()), (t[1], pauli_x())]),
        ],
        GateKind::Cz => vec![
            (1.0, vec![(t[0], proj0())]),
            (1.0, vec![(t[0], proj1()), (t[1], pauli_z())]),
        ],
        // SWAP = (I + XX + YY + ZZ) / 2
        GateKind::Swap => vec![
            (0.5, vec![]),
            (0.5, vec![(t[0], pauli_x()), (t[1], pauli_x())]),
            (0.5, vec![(t[0], pauli_y()), (t[1], pauli_y())]),
            (0.5, vec![(t[0], pauli_z()), (t[1], pauli_z())]),
        ],
        // I − P1P1 + P1P1X
        GateKind::Ccnot => vec![
            (1.0, vec![]),
            (-1.0, vec![(t[0], proj1()), (t[1], proj1())]),
            (1.0, vec![(t[0], proj1()), (t[1], proj1()), (t[2], pauli_x())]),
        ],
        kind => {
            let m = kind.single_qubit_matrix().expect("single-qubit kind");
            vec![(1.0, vec![(t[0], m)])]
        }
    };
    let dim = 1 << n_qubits;
    let mut u = Matrix {
        dim,
        data: vec![c(0.0, 0.0); dim * dim],
    };
    for (scale, factors) in &terms {
        u.add_scaled(&tensor(n_qubits, factors), *scale);
    }
    u
}

/// Product of the unitaries of one column's gates.
pub fn column_unitary(gates: &[Gate], n_qubits: usize) -> Matrix {
    gates.iter().fold(Matrix::identity(1 << n_qubits), |acc, g| {
        gate_unitary(g, n_qubits).matmul(&acc)
    })
}

/// Per-step states (`C + 1` entries) computed through dense unitaries.
pub fn gate_matrix_oracle(c: &Circuit) -> Result<Vec<QuantumState>, DenseError> {
    let n = c.n_qubits();
    if n > MAX_DENSE_QUBITS {
        return Err(DenseError::TooLarge { n_qubits: n });
    }
    let mut v = c.initial_state().into_amplitudes();
    let mut out = vec![QuantumState::from_raw(n, v.clone())];
    for column in c.columns() {
        v = column_unitary(column, n).matvec(&v);
        out.push(QuantumState::from_raw(n, v.clone()));
    }
    Ok(out)
}
