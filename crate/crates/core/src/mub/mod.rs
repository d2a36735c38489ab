//! Complete sets of mutually unbiased bases over fields and Galois rings,
//! generalized Bell states, and their verification.

mod bell;
mod construct;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

pub use bell::{
    bell_fourier, bell_galois, entanglement_check, galois_bell_bases, EntanglementReport,
};
pub use construct::{mub_even, mub_odd};

use crate::chars::compensated_sum;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateVector {
    pub dim: usize,
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        Self {
            dim: amplitudes.len(),
            amplitudes,
        }
    }

    /// `|i⟩` in dimension `dim`.
    pub fn basis_state(dim: usize, i: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[i] = Complex64::new(1.0, 0.0);
        Self::new(amplitudes)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(compensated_sum(
            self.amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(u, v)| u.conj() * v),
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabeledState {
    /// Canonical index of `b`.
    pub b: u32,
    #[serde(flatten)]
    pub state: StateVector,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Basis {
    /// Canonical index of `a`, or `None` for the computational basis.
    pub a: Option<u32>,
    pub vectors: Vec<LabeledState>,
}

impl Basis {
    pub fn computational(dim: usize) -> Self {
        Self {
            a: None,
            vectors: (0..dim)
                .map(|i| LabeledState {
                    b: i as u32,
                    state: StateVector::basis_state(dim, i),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BasisSet {
    pub dim: usize,
    pub bases: Vec<Basis>,
    pub includes_computational: bool,
    /// Expected `|⟨u|v⟩|` for `u, v` in different bases.
    pub overlap: f64,
}

impl BasisSet {
    /// Whether this is a full set of `dim + 1` bases.
    pub fn is_complete(&self) -> bool {
        self.bases.len() == self.dim + 1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnbiasednessReport {
    pub dim: usize,
    pub bases: usize,
    /// Max over cross-basis pairs of `||⟨u|v⟩| - overlap|`.
    pub max_abs_deviation: f64,
    /// Max over within-basis pairs of `|⟨u_i|u_j⟩ - δ_ij|`.
    pub max_ortho_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn check_dims(set: &BasisSet) -> Result<()> {
    for state in set.bases.iter().flat_map(|b| &b.vectors) {
        if state.state.dim != set.dim {
            return Err(Error::DimensionMismatch {
                expected: set.dim,
                found: state.state.dim,
            });
        }
    }
    Ok(())
}

/// Max of `| |⟨u|v⟩| - target |` over `u ∈ left`, `v ∈ right`.
fn cross_deviation(left: &Basis, right: &Basis, target: f64) -> Result<f64> {
    let mut worst = 0f64;
    for u in &left.vectors {
        for v in &right.vectors {
            worst = worst.max((u.state.inner(&v.state)?.norm() - target).abs());
        }
    }
    Ok(worst)
}

fn ortho_deviation(basis: &Basis) -> Result<f64> {
    let mut worst = 0f64;
    let vectors = &basis.vectors;
    for i in 0..vectors.len() {
        for j in i..vectors.len() {
            let expected = if i == j { 1.0 } else { 0.0 };
            let g = vectors[i].state.inner(&vectors[j].state)?;
            worst = worst.max((g - Complex64::new(expected, 0.0)).norm());
        }
    }
    Ok(worst)
}

/// Checks orthonormality within each basis and the overlap across every
/// pair of distinct bases. Pairs are processed in parallel; the maxima are
/// order-independent.
pub fn verify_unbiasedness(set: &BasisSet, tolerance: f64) -> Result<UnbiasednessReport> {
    check_dims(set)?;
    let ortho: Vec<f64> = set
        .bases
        .par_iter()
        .map(ortho_deviation)
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..set.bases.len())
        .flat_map(|i| (i + 1..set.bases.len()).map(move |j| (i, j)))
        .collect();
    let cross: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| cross_deviation(&set.bases[i], &set.bases[j], set.overlap))
        .collect::<Result<_>>()?;
    let max_ortho_deviation = ortho.into_iter().fold(0f64, f64::max);
    let max_abs_deviation = cross.into_iter().fold(0f64, f64::max);
    Ok(UnbiasednessReport {
        dim: set.dim,
        bases: set.bases.len(),
        max_abs_deviation,
        max_ortho_deviation,
        tolerance,
        pass: max_abs_deviation <= tolerance && max_ortho_deviation <= tolerance,
    })
}

/// Max of `|⟨s_i|s_j⟩ - δ_ij|` over a family of states.
pub fn gram_deviation(states: &[StateVector]) -> Result<f64> {
    let rows: Vec<f64> = (0..states.len())
        .into_par_iter()
        .map(|i| {
            let mut worst = 0f64;
            for j in i..states.len() {
                let expected = if i == j { 1.0 } else { 0.0 };
                let g = states[i].inner(&states[j])?;
                worst = worst.max((g - Complex64::new(expected, 0.0)).norm());
            }
            Ok(worst)
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().fold(0f64, f64::max))
}
