//! Geometry and color of a state-o-gram, independent of any drawing backend.
//!
//! Every non-vanishing basis state becomes a bar centered at its phase angle
//! (x in `(−π, π]`) whose height is its measurement probability. Bars are
//! stacked in basis order, so bar `k` starts at the summed probability of all
//! earlier bars. Vanishing states are listed separately.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::state::{phase_angle, probability, QuantumState, VANISH_THRESHOLD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("rank {rank} out of range for {count} non-vanishing state(s)")]
    RankOutOfRange { rank: usize, count: usize },
    #[error("basis index {index} out of range for {n_qubits} qubit(s)")]
    IndexOutOfRange { index: usize, n_qubits: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[u8; 3]", into = "[u8; 3]")]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub fn hex(&self) -> String {
        format!("#{:02x}{:02x}{:02x}", self.0, self.1, self.2)
    }

    /// Full-saturation HSV with hue in degrees.
    fn from_hsv(hue: f64, value: f64) -> Rgb {
        let h = hue.rem_euclid(360.0) / 60.0;
        let x = value * (1.0 - (h % 2.0 - 1.0).abs());
        let (r, g, b) = match h as u32 {
            0 => (value, x, 0.0),
            1 => (x, value, 0.0),
            2 => (0.0, value, x),
            3 => (0.0, x, value),
            4 => (x, 0.0, value),
            _ => (value, 0.0, x),
        };
        let q = |c: f64| (c * 255.0).round() as u8;
        Rgb(q(r), q(g), q(b))
    }
}

impl From<[u8; 3]> for Rgb {
    fn from([r, g, b]: [u8; 3]) -> Self {
        Rgb(r, g, b)
    }
}

impl From<Rgb> for [u8; 3] {
    fn from(c: Rgb) -> Self {
        [c.0, c.1, c.2]
    }
}

pub const BLUE_HUE: f64 = 240.0;
pub const RED_HUE: f64 = 0.0;
pub const COLOR_VALUE: f64 = 0.85;

/// Blue for rank 0 through red for the last non-vanishing state, hue linear in rank.
pub fn color_for_rank(rank: usize, nonzero_count: usize) -> Result<Rgb, LayoutError> {
    if rank >= nonzero_count {
        return Err(LayoutError::RankOutOfRange {
            rank,
            count: nonzero_count,
        });
    }
    let hue = if nonzero_count == 1 {
        BLUE_HUE
    } else {
        let t = rank as f64 / (nonzero_count - 1) as f64;
        BLUE_HUE + (RED_HUE - BLUE_HUE) * t
    };
    Ok(Rgb::from_hsv(hue, COLOR_VALUE))
}

/// `|x_{n-1}…x_0⟩`, most-significant qubit first.
pub fn ket_label(basis_index: usize, n_qubits: usize) -> Result<String, LayoutError> {
    if n_qubits < usize::BITS as usize && basis_index >> n_qubits != 0 {
        return Err(LayoutError::IndexOutOfRange {
            index: basis_index,
            n_qubits,
        });
    }
    let mut s = String::with_capacity(n_qubits + 6);
    s.push('|');
    for q in (0..n_qubits).rev() {
        s.push(if basis_index >> q & 1 == 1 { '1' } else { '0' });
    }
    s.push('⟩');
    Ok(s)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bar {
    pub basis_index: usize,
    pub ket_label: String,
    /// Phase angle in `(−π, π]`.
    pub angle: f64,
    /// Probability of the basis state.
    pub height: f64,
    /// Summed height of all bars with a smaller basis index.
    pub y_offset: f64,
    pub color: Rgb,
    /// Position among the non-vanishing states; drives the color.
    pub nonzero_rank: usize,
}

impl Bar {
    pub fn top(&self) -> f64 {
        self.y_offset + self.height
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateogramLayout {
    pub n_qubits: usize,
    pub bars: Vec<Bar>,
    /// Ket labels of basis states below the vanish threshold, in basis order.
    pub vanishing: Vec<String>,
}

impl StateogramLayout {
    pub fn bar(&self, basis_index: usize) -> Option<&Bar> {
        self.bars
            .binary_search_by_key(&basis_index, |b| b.basis_index)
            .ok()
            .map(|k| &self.bars[k])
    }

    pub fn total_height(&self) -> f64 {
        self.bars.iter().map(|b| b.height).sum()
    }

    /// Compact one-line summary, e.g. `|0⟩ 0.5000@1.5708 |1⟩ 0.5000@-1.5708`.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for (k, b) in self.bars.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{} {:.4}@{:.4}", b.ket_label, b.height, b.angle);
        }
        s
    }
}

/// Lays out `s` as a state-o-gram.
pub fn compute_layout(s: &QuantumState) -> StateogramLayout {
    let n = s.n_qubits();
    let present: Vec<usize> = s
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| probability(**a) >= VANISH_THRESHOLD)
        .map(|(b, _)| b)
        .collect();
    let count = present.len();

    let mut bars = Vec::with_capacity(count);
    let mut offset = 0.0;
    for (rank, &b) in present.iter().enumerate() {
        let a = s.amplitudes()[b];
        let height = probability(a);
        bars.push(Bar {
            basis_index: b,
            ket_label: ket_label(b, n).expect("index within register"),
            angle: phase_angle(a).expect("non-vanishing amplitude"),
            height,
            y_offset: offset,
            color: color_for_rank(rank, count).expect("rank < count"),
            nonzero_rank: rank,
        });
        offset += height;
    }

    let mut next = present.iter().peekable();
    let mut vanishing = Vec::with_capacity(s.dim() - count);
    for b in 0..s.dim() {
        if next.peek() == Some(&&b) {
            next.next();
        } else {
            vanishing.push(ket_label(b, n).expect("index within register"));
        }
    }

    StateogramLayout {
        n_qubits: n,
        bars,
        vanishing,
    }
}

/// Wire form: `{"n":int,"bars":[{"b","label","angle","h","y","rgb"}],"vanishing":[str]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutJson {
    n: usize,
    bars: Vec<BarJson>,
    vanishing: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BarJson {
    b: usize,
    label: String,
    angle: f64,
    h: f64,
    y: f64,
    rgb: Rgb,
}

impl Serialize for StateogramLayout {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LayoutJson {
            n: self.n_qubits,
            bars: self
                .bars
                .iter()
                .map(|b| BarJson {
                    b: b.basis_index,
                    label: b.ket_label.clone(),
                    angle: b.angle,
                    h: b.height,
                    y: b.y_offset,
                    rgb: b.color,
                })
                .collect(),
            vanishing: self.vanishing.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StateogramLayout {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = LayoutJson::deserialize(deserializer)?;
        Ok(StateogramLayout {
            n_qubits: j.n,
            bars: j
                .bars
                .into_iter()
                .enumerate()
                .map(|(rank, b)| Bar {
                    basis_index: b.b,
                    ket_label: b.label,
                    angle: b.angle,
                    height: b.h,
                    y_offset: b.y,
                    color: b.rgb,
                    nonzero_rank: rank,
                })
                .collect(),
            vanishing: j.vanishing,
        })
    }
}
