//! Statevector simulation with state-o-gram output.
//!
//! A state-o-gram draws each non-vanishing computational basis state as a bar
//! placed on the x-axis at the phase angle of its amplitude, with height equal
//! to its measurement probability. Bars are stacked in basis order so they
//! always fill the chart from 0 to 100%.
//!
//! ```
//! use stateogram::{dj_circuit, run_circuit, Oracle};
//!
//! let circuit = dj_circuit(Oracle::Constant0, 3).unwrap();
//! let trace = run_circuit(&circuit);
//! let last = trace.last().unwrap();
//! let p = last.state.marginal_probability(&[1, 2], &[0, 0]).unwrap();
//! assert!((p - 1.0).abs() < 1e-10);
//! ```

pub mod circuit;
pub mod dense;
pub mod dj;
pub mod format;
pub mod gate;
pub mod layout;
pub mod state;
pub mod svg;
#[cfg(feature = "testing")]
pub mod testing;
pub mod trace;

pub use circuit::{run_circuit, Circuit, CircuitError, TraceStep};
pub use dense::{gate_matrix_oracle, DenseError};
pub use dj::{dj_circuit, dj_oracle, Oracle, OracleError};
pub use format::{parse_circuit, serialize_circuit, CircuitDocument, FormatError, GateRecord};
pub use gate::{apply_gate, hadamard_all, Gate, GateError, GateKind};
pub use layout::{color_for_rank, compute_layout, ket_label, Bar, Rgb, StateogramLayout};
pub use state::{
    basis_state, phase_angle, probability, Amplitude, QuantumState, StateError, VANISH_THRESHOLD,
};
pub use svg::{render_strip, render_svg, RenderStyle, SvgError};
pub use trace::TraceDocument;
