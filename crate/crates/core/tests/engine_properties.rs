use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stateogram::dense::{gate_matrix_oracle, gate_unitary};
use stateogram::testing::{random_circuit, random_state};
use stateogram::{
    apply_gate, basis_state, dj_circuit, hadamard_all, phase_angle, run_circuit, Amplitude,
    Circuit, Gate, GateKind, Oracle,
};

fn all_kinds() -> Vec<GateKind> {
    vec![
        GateKind::H,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::S,
        GateKind::Sdg,
        GateKind::T,
        GateKind::Tdg,
        GateKind::Phase(1.234),
        GateKind::Cnot,
        GateKind::Cz,
        GateKind::Swap,
        GateKind::Ccnot,
    ]
}

fn max_diff(a: &[Amplitude], b: &[Amplitude]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn random_targets(rng: &mut ChaCha8Rng, n: usize, arity: usize) -> Vec<usize> {
    let mut t: Vec<usize> = Vec::new();
    while t.len() < arity {
        let q = rng.gen_range(0..n);
        if !t.contains(&q) {
            t.push(q);
        }
    }
    t
}

#[test]
fn every_gate_preserves_norm() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kind in all_kinds() {
        for _ in 0..1000 {
            let n = rng.gen_range(kind.arity().max(1)..=5);
            let s = random_state(&mut rng, n, 0.0);
            let g = Gate::new(kind, random_targets(&mut rng, n, kind.arity())).unwrap();
            let out = apply_gate(&s, &g).unwrap();
            assert!((out.total_probability() - s.total_probability()).abs() < 1e-12, "{kind}");
        }
    }
}

#[test]
fn self_inverse_gates() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let involutions = [
        GateKind::H,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::Cnot,
        GateKind::Cz,
        GateKind::Swap,
        GateKind::Ccnot,
    ];
    for kind in involutions {
        for _ in 0..200 {
            let n = rng.gen_range(3..=5);
            let s = random_state(&mut rng, n, 0.2);
            let g = Gate::new(kind, random_targets(&mut rng, n, kind.arity())).unwrap();
            let twice = apply_gate(&apply_gate(&s, &g).unwrap(), &g).unwrap();
            assert!(max_diff(twice.amplitudes(), s.amplitudes()) < 1e-12, "{kind}");
        }
    }
}

#[test]
fn kernels_agree_with_dense_unitaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for kind in all_kinds() {
        for _ in 0..50 {
            let n = rng.gen_range(3..=4);
            let s = random_state(&mut rng, n, 0.0);
            let g = Gate::new(kind, random_targets(&mut rng, n, kind.arity())).unwrap();
            let fast = apply_gate(&s, &g).unwrap();
            let slow = gate_unitary(&g, n).matvec(s.amplitudes());
            assert!(max_diff(fast.amplitudes(), &slow) < 1e-12, "{g}");
        }
    }
}

/// 2^(−n/2)·(−1)^popcount(x & y), written out independently of the kernels.
fn hadamard_formula(n: usize, y: usize, x: usize) -> f64 {
    let sign = if (x & y).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
    sign / ((1u64 << n) as f64).sqrt()
}

#[test]
fn hadamard_sign_law() {
    for n in 1..=5 {
        for y in 0..(1usize << n) {
            let out = hadamard_all(&basis_state(n, y).unwrap());
            for (x, a) in out.amplitudes().iter().enumerate() {
                let want = hadamard_formula(n, y, x);
                assert!(a.im.abs() < 1e-15);
                assert_eq!(a.re.signum(), want.signum(), "n={n} y={y} x={x}");
                assert!((a.re - want).abs() < 1e-12);
            }
        }
    }
    // |011⟩: popcount(011 & 011) = 2, so the sign at |011⟩ is +
    let out = hadamard_all(&basis_state(3, 0b011).unwrap());
    assert!(out.amplitudes()[0b011].re > 0.0);
}

#[test]
fn stride_and_dense_paths_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let depth = rng.gen_range(0..=20);
        let c = random_circuit(&mut rng, n, depth);
        let fast = run_circuit(&c);
        let slow = gate_matrix_oracle(&c).unwrap();
        assert_eq!(fast.len(), slow.len());
        for (f, s) in fast.iter().zip(&slow) {
            assert!(max_diff(f.state.amplitudes(), s.amplitudes()) < 1e-12);
        }
    }
}

#[test]
fn trace_has_one_step_per_column_plus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..50 {
        let depth = rng.gen_range(0..=12);
        let c = random_circuit(&mut rng, 3, depth);
        let steps = run_circuit(&c);
        assert_eq!(steps.len(), depth + 1);
        assert_eq!(steps[0].state, basis_state(3, c.init_index()).unwrap());
        for (k, step) in steps.iter().enumerate() {
            assert_eq!(step.column_index, k);
            assert!((step.state.total_probability() - 1.0).abs() < 1e-10);
        }
    }
}

#[test]
fn deutsch_jozsa_separates_constant_from_balanced() {
    for n in 3..=6 {
        for oracle in Oracle::all(n - 1) {
            let c = dj_circuit(oracle, n).unwrap();
            let last = run_circuit(&c).pop().unwrap().state;
            let args: Vec<usize> = (1..n).collect();
            let p = last.marginal_probability(&args, &vec![0; n - 1]).unwrap();
            let want = if oracle.is_constant() { 1.0 } else { 0.0 };
            assert!((p - want).abs() < 1e-10, "n={n} {oracle:?}: {p}");
        }
    }
}

#[test]
fn deutsch_jozsa_constant_final_states() {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let zero = run_circuit(&dj_circuit(Oracle::Constant0, 3).unwrap()).pop().unwrap().state;
    let want0 = [r, -r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    let one = run_circuit(&dj_circuit(Oracle::Constant1, 3).unwrap()).pop().unwrap().state;
    for (k, w) in want0.iter().enumerate() {
        assert!((zero.amplitudes()[k] - Amplitude::new(*w, 0.0)).norm() < 1e-12);
        // f ≡ 1 flips the global sign
        assert!((one.amplitudes()[k] - Amplitude::new(-*w, 0.0)).norm() < 1e-12);
    }
    assert_eq!(phase_angle(zero.amplitudes()[1]).unwrap(), PI);
}

#[test]
fn balanced_oracle_cancels_low_states_in_dense_route() {
    let c = dj_circuit(Oracle::Balanced { mask: 0b11, negate: true }, 3).unwrap();
    let last = gate_matrix_oracle(&c).unwrap().pop().unwrap();
    assert!(last.amplitudes()[0].norm() < 1e-12);
    assert!(last.amplitudes()[1].norm() < 1e-12);
}

#[test]
fn oracle_unitary_matches_truth_table() {
    // |a⟩|x0⟩ → |a⟩|x0 ⊕ f(a)⟩ on basis inputs
    for oracle in Oracle::all(2) {
        let cols = stateogram::dj_oracle(oracle, 3).unwrap();
        for b in 0..8usize {
            let c = Circuit::new(3, (0..3).map(|q| (b >> q & 1) as u8).collect(), cols.clone())
                .unwrap();
            let out = run_circuit(&c).pop().unwrap().state;
            let a = (b >> 1) as u64;
            let want = b ^ oracle.eval(a) as usize;
            assert!((out.amplitudes()[want].re - 1.0).abs() < 1e-15, "{oracle:?} b={b}");
        }
    }
}

#[test]
fn marginals_sum_to_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let s = random_state(&mut rng, n, 0.3);
        let k = rng.gen_range(1..=n);
        let qubits: Vec<usize> = (0..n).rev().take(k).collect();
        let total: f64 = (0..(1usize << k))
            .map(|o| {
                let bits: Vec<u8> = (0..k).map(|j| (o >> j & 1) as u8).collect();
                s.marginal_probability(&qubits, &bits).unwrap()
            })
            .sum();
        assert!((total - 1.0).abs() < 1e-10);
    }
}

#[test]
fn phase_range_and_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..5000 {
        let a = Amplitude::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        if a.norm_sqr() < 1e-6 {
            continue;
        }
        let p = phase_angle(a).unwrap();
        assert!(p > -PI && p <= PI);
        assert_eq!(phase_angle(a.conj()).unwrap(), -p);
    }
}
