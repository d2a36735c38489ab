use num_complex::Complex64;

use super::{Basis, BasisSet, LabeledState, StateVector};
use crate::chars::{i_pow, unit_root};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::gring::RingSpec;

/// `q + 1` bases in dimension `q` for odd `q`.
///
/// Basis `a` holds `|θ_b⟩ = q^{-1/2} Σ_n ψ_k(n)·ω_p^{tr(a n² + b n)} |n⟩` for
/// every `b`, with `ψ_k(n) = exp(2πi·k·n/q)` on the canonical index; the
/// computational basis comes last.
pub fn mub_odd(field: &FieldSpec, k: u64) -> Result<BasisSet> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let q = field.q();
    let dim = q as usize;
    let scale = 1.0 / (dim as f64).sqrt();
    let phase: Vec<Complex64> = (0..q as u64)
        .map(|n| unit_root(((k % q as u64) * n % q as u64) as i64, q as u64))
        .collect();
    let squares: Vec<u32> = (0..q).map(|n| field.mul_idx(n, n)).collect();

    let mut bases: Vec<Basis> = (0..q)
        .map(|a| {
            let quadratic: Vec<u32> = squares.iter().map(|&s| field.mul_idx(a, s)).collect();
            let vectors = (0..q)
                .map(|b| {
                    let amplitudes = (0..q)
                        .map(|n| {
                            let arg = field.add_idx(quadratic[n as usize], field.mul_idx(b, n));
                            let t = field.trace_idx(arg);
                            phase[n as usize] * unit_root(t as i64, field.p() as u64) * scale
                        })
                        .collect();
                    LabeledState {
                        b,
                        state: StateVector::new(amplitudes),
                    }
                })
                .collect();
            Basis {
                a: Some(a),
                vectors,
            }
        })
        .collect();
    bases.push(Basis::computational(dim));
    Ok(BasisSet {
        dim,
        bases,
        includes_computational: true,
        overlap: scale,
    })
}

/// `2^m + 1` bases in dimension `2^m` from the Galois ring `R_{4^m}`.
///
/// Basis `a ∈ T` holds `|θ_b⟩ = 2^{-m/2} Σ_{n ∈ T} ψ_k(n)·i^{gtrace((a + 2b) n)} |n⟩`
/// for `b ∈ T`. States are indexed by Teichmüller position and
/// `ψ_k(n) = exp(2πi·k·pos(n)/2^m)`. Labels `a`, `b` are ring indices.
pub fn mub_even(ring: &RingSpec, k: u64) -> Result<BasisSet> {
    let dim = 1usize << ring.m();
    let scale = 1.0 / (dim as f64).sqrt();
    let teich: Vec<_> = ring.teichmuller().collect();
    let phase: Vec<Complex64> = (0..dim as u64)
        .map(|pos| unit_root(((k % dim as u64) * pos % dim as u64) as i64, dim as u64))
        .collect();

    let mut bases = Vec::with_capacity(dim + 1);
    for &a in &teich {
        let mut vectors = Vec::with_capacity(dim);
        for &b in &teich {
            let shift = ring.add(a, ring.add(b, b));
            let amplitudes = teich
                .iter()
                .enumerate()
                .map(|(pos, &n)| Ok(phase[pos] * i_pow(ring.gtrace(ring.mul(shift, n))?) * scale))
                .collect::<Result<Vec<_>>>()?;
            vectors.push(LabeledState {
                b: b.index(),
                state: StateVector::new(amplitudes),
            });
        }
        bases.push(Basis {
            a: Some(a.index()),
            vectors,
        });
    }
    bases.push(Basis::computational(dim));
    Ok(BasisSet {
        dim,
        bases,
        includes_computational: true,
        overlap: scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mub::{verify_unbiasedness, DEFAULT_TOLERANCE};

    fn close(a: &[Complex64], b: &[Complex64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() < 1e-12)
    }

    #[test]
    fn q3_worked_vector() {
        let f3 = FieldSpec::prime(3).unwrap();
        let set = mub_odd(&f3, 0).unwrap();
        let s = 1.0 / 3f64.sqrt();
        let w = unit_root(1, 3);
        let expected = [Complex64::new(s, 0.0), w * s, w * s];
        assert!(close(&set.bases[1].vectors[0].state.amplitudes, &expected));
        assert_eq!(set.bases.len(), 4);
    }

    #[test]
    fn q3_a0_is_fourier() {
        let f3 = FieldSpec::prime(3).unwrap();
        let set = mub_odd(&f3, 0).unwrap();
        let s = 1.0 / 3f64.sqrt();
        for v in &set.bases[0].vectors {
            let expected: Vec<Complex64> =
                (0..3).map(|n| unit_root(v.b as i64 * n, 3) * s).collect();
            assert!(close(&v.state.amplitudes, &expected));
        }
    }

    #[test]
    fn even_char_rejected() {
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        assert_eq!(mub_odd(&f4, 0).unwrap_err(), Error::EvenCharacteristic);
    }

    #[test]
    fn qubit_pauli_bases() {
        let r = RingSpec::new(1).unwrap();
        let set = mub_even(&r, 0).unwrap();
        let s = 0.5f64.sqrt();
        let c = |re: f64, im: f64| Complex64::new(re * s, im * s);
        let a0: Vec<_> = set.bases[0]
            .vectors
            .iter()
            .map(|v| v.state.amplitudes.clone())
            .collect();
        assert!(close(&a0[0], &[c(1.0, 0.0), c(1.0, 0.0)]));
        assert!(close(&a0[1], &[c(1.0, 0.0), c(-1.0, 0.0)]));
        let a1: Vec<_> = set.bases[1]
            .vectors
            .iter()
            .map(|v| v.state.amplitudes.clone())
            .collect();
        assert!(close(&a1[0], &[c(1.0, 0.0), c(0.0, 1.0)]));
        assert!(close(&a1[1], &[c(1.0, 0.0), c(0.0, -1.0)]));
    }

    #[test]
    fn small_sets_are_unbiased() {
        for q in [3u64, 5, 9] {
            let f = FieldSpec::with_order(q).unwrap();
            let r = verify_unbiasedness(&mub_odd(&f, 1).unwrap(), DEFAULT_TOLERANCE).unwrap();
            assert!(r.pass, "q={q}: {r:?}");
        }
        for m in 1..=3 {
            let ring = RingSpec::new(m).unwrap();
            let set = mub_even(&ring, 0).unwrap();
            assert_eq!(set.bases.len(), (1 << m) + 1);
            let r = verify_unbiasedness(&set, DEFAULT_TOLERANCE).unwrap();
            assert!(r.pass, "m={m}: {r:?}");
        }
    }
}
