use num_complex::Complex64;
use serde::Serialize;

use super::{Basis, BasisSet, LabeledState, StateVector};
use crate::chars::unit_root;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// `q^{-1/2} Σ_n ω_q^{k n} |n, n + h⟩` with indices taken mod `q`.
///
/// The pair `(first, second)` sits at position `first·q + second`.
pub fn bell_fourier(q: usize, h: usize, k: usize) -> Result<StateVector> {
    if q < 2 {
        return Err(Error::InvalidDimension(q as u64));
    }
    let scale = 1.0 / (q as f64).sqrt();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); q * q];
    for n in 0..q {
        let phase = unit_root(((k % q) * n % q) as i64, q as u64);
        amplitudes[n * q + (n + h) % q] = phase * scale;
    }
    Ok(StateVector::new(amplitudes))
}

/// `q^{-1/2} Σ_n ω_p^{tr((a n + b) n)} |n, n + h⟩` with field addition in the second slot.
pub fn bell_galois(
    field: &FieldSpec,
    a: FieldElement,
    h: FieldElement,
    b: FieldElement,
) -> Result<StateVector> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if [a, h, b].iter().any(|&x| !field.contains(x)) {
        return Err(Error::MixedFields);
    }
    let q = field.q() as usize;
    let scale = 1.0 / (q as f64).sqrt();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); q * q];
    for n in field.elements() {
        let arg = field.mul(field.add(field.mul(a, n), b), n);
        let phase = unit_root(field.trace(arg) as i64, field.p() as u64);
        let second = field.add(n, h);
        amplitudes[n.index() as usize * q + second.index() as usize] = phase * scale;
    }
    Ok(StateVector::new(amplitudes))
}

/// For fixed `h`, one basis per `a` holding `bell_galois(a, h, b)` for every `b`.
pub fn galois_bell_bases(field: &FieldSpec, h: FieldElement) -> Result<BasisSet> {
    let q = field.q() as usize;
    let bases = field
        .elements()
        .map(|a| {
            let vectors = field
                .elements()
                .map(|b| {
                    Ok(LabeledState {
                        b: b.index(),
                        state: bell_galois(field, a, h, b)?,
                    })
                })
                .collect::<Result<_>>()?;
            Ok(Basis {
                a: Some(a.index()),
                vectors,
            })
        })
        .collect::<Result<_>>()?;
    Ok(BasisSet {
        dim: q * q,
        bases,
        includes_computational: false,
        overlap: 1.0 / (q as f64).sqrt(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub subsystem_dim: usize,
    /// Reduced density operator of the first subsystem, row-major.
    pub reduced: Vec<Vec<Complex64>>,
    /// Max entrywise `|ρ - I/q|`.
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Traces out the second subsystem and compares with `I/q`.
pub fn entanglement_check(state: &StateVector, tolerance: f64) -> Result<EntanglementReport> {
    let q = (state.dim as f64).sqrt().round() as usize;
    if q * q != state.dim {
        return Err(Error::NonSquareDimension(state.dim));
    }
    let psi = &state.amplitudes;
    let mut reduced = vec![vec![Complex64::new(0.0, 0.0); q]; q];
    let mut max_deviation = 0f64;
    for (i, row) in reduced.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..q).map(|k| psi[i * q + k] * psi[j * q + k].conj()).sum();
            let target = if i == j { 1.0 / q as f64 } else { 0.0 };
            max_deviation = max_deviation.max((*entry - Complex64::new(target, 0.0)).norm());
        }
    }
    Ok(EntanglementReport {
        subsystem_dim: q,
        reduced,
        max_deviation,
        tolerance,
        pass: max_deviation <= tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mub::{gram_deviation, verify_unbiasedness, DEFAULT_TOLERANCE};

    #[test]
    fn qubit_bell_states() {
        let s = 1.0 / 2f64.sqrt();
        let phi_plus = bell_fourier(2, 0, 0).unwrap();
        assert_eq!(
            phi_plus.amplitudes,
            vec![
                Complex64::new(s, 0.0),
                0.0.into(),
                0.0.into(),
                Complex64::new(s, 0.0)
            ]
        );
        let psi_minus = bell_fourier(2, 1, 1).unwrap();
        assert_eq!(
            psi_minus.amplitudes,
            vec![
                0.0.into(),
                Complex64::new(s, 0.0),
                Complex64::new(-s, 0.0),
                0.0.into()
            ]
        );
        let report = entanglement_check(&phi_plus, DEFAULT_TOLERANCE).unwrap();
        assert!(report.max_deviation < 1e-15);
        assert_eq!(
            bell_fourier(1, 0, 0).unwrap_err(),
            Error::InvalidDimension(1)
        );
    }

    #[test]
    fn qutrit_diagonal() {
        let s = 1.0 / 3f64.sqrt();
        let state = bell_fourier(3, 0, 0).unwrap();
        for (idx, amp) in state.amplitudes.iter().enumerate() {
            let expected = if idx % 4 == 0 { s } else { 0.0 };
            assert!((amp - Complex64::new(expected, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn product_state_is_not_entangled() {
        let report =
            entanglement_check(&StateVector::basis_state(4, 0), DEFAULT_TOLERANCE).unwrap();
        assert!(!report.pass);
        assert_eq!(report.reduced[0][0], Complex64::new(1.0, 0.0));
        assert_eq!(report.reduced[1][1], Complex64::new(0.0, 0.0));
        assert_eq!(
            entanglement_check(&StateVector::basis_state(5, 0), 1e-9).unwrap_err(),
            Error::NonSquareDimension(5)
        );
    }

    #[test]
    fn galois_bell_f3() {
        let f3 = FieldSpec::prime(3).unwrap();
        let state = bell_galois(&f3, f3.one(), f3.zero(), f3.zero()).unwrap();
        assert!(entanglement_check(&state, 1e-12).unwrap().pass);
        let uniform = bell_galois(&f3, f3.zero(), f3.zero(), f3.zero()).unwrap();
        assert_eq!(uniform, bell_fourier(3, 0, 0).unwrap());
        for h in f3.elements() {
            let set = galois_bell_bases(&f3, h).unwrap();
            assert!(verify_unbiasedness(&set, DEFAULT_TOLERANCE).unwrap().pass);
        }
    }

    #[test]
    fn fourier_family_orthonormal() {
        for q in 2..=4 {
            let states: Vec<_> = (0..q)
                .flat_map(|h| (0..q).map(move |k| bell_fourier(q, h, k).unwrap()))
                .collect();
            assert!(gram_deviation(&states).unwrap() < 1e-12);
        }
    }
}
