use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stateogram::layout::ket_label;
use stateogram::testing::random_state;
use stateogram::{apply_gate, compute_layout, Gate, QuantumState, VANISH_THRESHOLD};

fn complement_all(s: &QuantumState) -> QuantumState {
    (0..s.n_qubits()).fold(s.clone(), |acc, q| apply_gate(&acc, &Gate::x(q)).unwrap())
}

#[test]
fn completeness_and_stacking() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for n in 1..=8 {
        for _ in 0..500 {
            let sparsity = rng.gen_range(0.0..0.9);
            let s = random_state(&mut rng, n, sparsity);
            let l = compute_layout(&s);
            assert_eq!(l.bars.len() + l.vanishing.len(), 1 << n);

            let mut seen = vec![false; 1 << n];
            for b in &l.bars {
                assert!(!std::mem::replace(&mut seen[b.basis_index], true));
            }
            for label in &l.vanishing {
                let idx = (0..1usize << n).find(|&b| ket_label(b, n).unwrap() == *label).unwrap();
                assert!(!std::mem::replace(&mut seen[idx], true));
                assert!(s.amplitudes()[idx].norm_sqr() < VANISH_THRESHOLD);
            }
            assert!(seen.iter().all(|&x| x));

            let mut expected_offset = 0.0;
            for (k, bar) in l.bars.iter().enumerate() {
                assert_eq!(bar.nonzero_rank, k);
                assert_eq!(bar.y_offset, expected_offset);
                assert!(bar.top() <= 1.0 + 1e-9);
                let a = s.amplitudes()[bar.basis_index];
                let mut want = a.im.atan2(a.re);
                if want == -std::f64::consts::PI {
                    want = std::f64::consts::PI;
                }
                assert!((bar.angle - want).abs() < 1e-12);
                expected_offset += bar.height;
            }
            for pair in l.bars.windows(2) {
                assert!(pair[0].basis_index < pair[1].basis_index);
                assert_eq!(pair[1].y_offset, pair[0].y_offset + pair[0].height);
            }
            assert!((l.total_height() - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn flipping_every_qubit_complements_indices() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let s = random_state(&mut rng, n, 0.4);
        let before = compute_layout(&s);
        let after = compute_layout(&complement_all(&s));
        let mask = (1usize << n) - 1;
        assert_eq!(before.bars.len(), after.bars.len());
        for bar in &before.bars {
            let moved = after.bar(bar.basis_index ^ mask).unwrap();
            assert_eq!(moved.height, bar.height);
            assert_eq!(moved.angle, bar.angle);
        }
        for pair in after.bars.windows(2) {
            assert!(pair[0].basis_index < pair[1].basis_index);
        }
    }
}

proptest! {
    #[test]
    fn layout_is_deterministic(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_state(&mut rng, n, 0.3);
        let copy = QuantumState::from_amplitudes(n, s.amplitudes().to_vec()).unwrap();
        let a = compute_layout(&s);
        let b = compute_layout(&copy);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn layout_json_round_trips(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let l = compute_layout(&random_state(&mut rng, n, 0.3));
        let back: stateogram::StateogramLayout =
            serde_json::from_str(&serde_json::to_string(&l).unwrap()).unwrap();
        prop_assert_eq!(back, l);
    }
}
