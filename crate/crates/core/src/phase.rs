//! Hermitian phase operators on `C^q`: Pegg–Barnett, the Galois variant
//! built from field MUBs, and the phase-locking operator on coprime
//! frequencies, with their expectation values in pure phase states.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::chars::{compensated_sum, unit_root};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::mub::mub_odd;
use crate::numtheory::{gcd, mangoldt, ramanujan_sum, totient};

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HermitianOperator {
    pub dim: usize,
    pub entries: Vec<Vec<Complex64>>,
}

impl HermitianOperator {
    fn from_fn<F>(dim: usize, entry: F) -> Self
    where
        F: Fn(usize, usize) -> Complex64 + Sync,
    {
        let entries = (0..dim)
            .into_par_iter()
            .map(|row| (0..dim).map(|col| entry(row, col)).collect())
            .collect();
        Self { dim, entries }
    }

    /// `Σ_k λ_k |v_k⟩⟨v_k|`.
    fn spectral(dim: usize, terms: &[(f64, Vec<Complex64>)]) -> Self {
        Self::from_fn(dim, |n, m| {
            compensated_sum(terms.iter().map(|(lambda, v)| v[n] * v[m].conj() * *lambda))
        })
    }

    /// Max of `|A_{nm} - conj(A_{mn})|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut worst = 0f64;
        for n in 0..self.dim {
            for m in n..self.dim {
                worst = worst.max((self.entries[n][m] - self.entries[m][n].conj()).norm());
            }
        }
        worst
    }

    pub fn max_entry_difference(&self, other: &Self) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(self
            .entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0f64, f64::max))
    }

    pub fn trace(&self) -> Complex64 {
        compensated_sum((0..self.dim).map(|i| self.entries[i][i]))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(Self::from_fn(self.dim, |n, m| {
            compensated_sum((0..self.dim).map(|j| self.entries[n][j] * other.entries[j][m]))
        }))
    }

    /// `⟨f|A|f⟩`.
    pub fn expectation(&self, f: &[Complex64]) -> Result<Complex64> {
        if f.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: f.len(),
            });
        }
        Ok(compensated_sum((0..self.dim).flat_map(|n| {
            (0..self.dim).map(move |m| f[n].conj() * self.entries[n][m] * f[m])
        })))
    }
}

/// `u_n = exp(i·n·β)/√q` on the integer labels `n = 0..q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PureState {
    pub dim: usize,
    pub beta: f64,
    pub amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(dim: usize, beta: f64) -> Self {
        let scale = 1.0 / (dim as f64).sqrt();
        let amplitudes = (0..dim)
            .map(|n| Complex64::from_polar(scale, n as f64 * beta))
            .collect();
        Self {
            dim,
            beta,
            amplitudes,
        }
    }
}

fn check_dimension(q: usize) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidDimension(q as u64));
    }
    Ok(())
}

/// `(θ_k)_n = exp(2πi·n·k/q)/√q`.
pub fn fourier_vector(q: usize, k: usize) -> Vec<Complex64> {
    let scale = 1.0 / (q as f64).sqrt();
    (0..q)
        .map(|n| unit_root((n * k % q) as i64, q as u64) * scale)
        .collect()
}

/// `Σ_k θ_k |θ_k⟩⟨θ_k|` with `θ_k = θ0 + 2πk/q` on the Fourier vectors.
pub fn pegg_barnett_operator(q: usize, theta0: f64) -> Result<HermitianOperator> {
    check_dimension(q)?;
    let terms: Vec<(f64, Vec<Complex64>)> = (0..q)
        .map(|k| (theta0 + TAU * k as f64 / q as f64, fourier_vector(q, k)))
        .collect();
    Ok(HermitianOperator::spectral(q, &terms))
}

/// `S(n, m) = Σ_b b̄·ω_p^{tr(b(n - m))}`, summed directly.
pub fn s_sum(field: &FieldSpec, n: FieldElement, m: FieldElement) -> Result<Complex64> {
    if !field.contains(n) || !field.contains(m) {
        return Err(Error::MixedFields);
    }
    Ok(s_sum_idx(field, field.sub_idx(n.index(), m.index())))
}

fn s_sum_idx(field: &FieldSpec, diff: u32) -> Complex64 {
    let p = field.p() as u64;
    compensated_sum((0..field.q()).map(|b| {
        let t = field.trace_idx(field.mul_idx(b, diff));
        unit_root(t as i64, p) * b as f64
    }))
}

/// Geometric-series evaluation of `S(n, m)`: `q(q-1)/2` when the trace of
/// `n - m` vanishes, else `q/(ω_p^{tr(n-m)} - 1)`. Matches the direct sum
/// for prime `q`.
pub fn s_sum_closed_form(field: &FieldSpec, n: FieldElement, m: FieldElement) -> Complex64 {
    let q = field.q() as f64;
    let t = field.trace(field.sub(n, m));
    if t == 0 {
        return Complex64::new(q * (q - 1.0) / 2.0, 0.0);
    }
    Complex64::new(q, 0.0) / (unit_root(t as i64, field.p() as u64) - 1.0)
}

/// The Galois phase operator, built spectrally and from matrix elements.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaloisPhaseOperator {
    pub q: u32,
    pub a: u32,
    pub k: u64,
    /// `Σ_b θ_b |θ_b^a⟩⟨θ_b^a|`, `θ_b = 2π·b̄/q`.
    pub spectral: HermitianOperator,
    /// `(2π/q²)·exp(2πi·k(n̄ - m̄)/q)·ω_p^{tr(a(n² - m²))}·S(n, m)`.
    pub matrix_elements: HermitianOperator,
    pub max_discrepancy: f64,
}

pub fn galois_phase_operator(
    field: &FieldSpec,
    a: FieldElement,
    k: u64,
) -> Result<GaloisPhaseOperator> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !field.contains(a) {
        return Err(Error::MixedFields);
    }
    let q = field.q() as usize;
    let basis = &mub_odd(field, k)?.bases[a.index() as usize];
    let terms: Vec<(f64, Vec<Complex64>)> = basis
        .vectors
        .iter()
        .map(|v| (TAU * v.b as f64 / q as f64, v.state.amplitudes.clone()))
        .collect();
    let spectral = HermitianOperator::spectral(q, &terms);

    let s_by_diff: Vec<Complex64> = (0..q as u32).map(|d| s_sum_idx(field, d)).collect();
    let squares: Vec<u32> = (0..q as u32).map(|n| field.mul_idx(n, n)).collect();
    let k = k % q as u64;
    let prefactor = TAU / (q * q) as f64;
    let matrix_elements = HermitianOperator::from_fn(q, |n, m| {
        let index_diff = (n as i64 - m as i64).rem_euclid(q as i64) as u64;
        let psi = unit_root((k * index_diff % q as u64) as i64, q as u64);
        let quad = field.sub_idx(squares[n], squares[m]);
        let t = field.trace_idx(field.mul_idx(a.index(), quad));
        let kappa = unit_root(t as i64, field.p() as u64);
        let s = s_by_diff[field.sub_idx(n as u32, m as u32) as usize];
        psi * kappa * s * prefactor
    });
    let max_discrepancy = spectral.max_entry_difference(&matrix_elements)?;
    Ok(GaloisPhaseOperator {
        q: q as u32,
        a: a.index(),
        k,
        spectral,
        matrix_elements,
        max_discrepancy,
    })
}

/// Index range of the Ramanujan-kernel double sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LockRange {
    /// `n, l ∈ 0..q`.
    #[default]
    Full,
    /// `n, l ∈ 0..φ(q)`.
    Totient,
}

impl LockRange {
    fn len(self, q: usize) -> Result<usize> {
        Ok(match self {
            Self::Full => q,
            Self::Totient => totient(q as u64)? as usize,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LockOperator {
    pub q: usize,
    /// `Σ_{gcd(k,q)=1} θ'_k |θ'_k⟩⟨θ'_k|`, `θ'_k = 2πk/q`.
    pub spectral: HermitianOperator,
    /// `(1/q)·c_q(n - l)` over `0..q`.
    pub ramanujan: HermitianOperator,
    /// Max entrywise distance of the Ramanujan matrix from the coprime projector.
    pub projector_deviation: f64,
}

fn coprime_indices(q: usize) -> impl Iterator<Item = usize> {
    (1..=q)
        .filter(move |&k| gcd(k as u64, q as u64) == 1)
        .map(move |k| k % q)
}

pub fn lock_operator(q: usize) -> Result<LockOperator> {
    check_dimension(q)?;
    let weighted: Vec<(f64, Vec<Complex64>)> = coprime_indices(q)
        .map(|k| (TAU * k as f64 / q as f64, fourier_vector(q, k)))
        .collect();
    let unweighted: Vec<(f64, Vec<Complex64>)> =
        weighted.iter().map(|(_, v)| (1.0, v.clone())).collect();
    let spectral = HermitianOperator::spectral(q, &weighted);
    let projector = HermitianOperator::spectral(q, &unweighted);
    let kernel = ramanujan_kernel(q)?;
    let ramanujan = HermitianOperator::from_fn(q, |n, l| {
        Complex64::new(kernel[n + q - l] as f64 / q as f64, 0.0)
    });
    let projector_deviation = ramanujan.max_entry_difference(&projector)?;
    Ok(LockOperator {
        q,
        spectral,
        ramanujan,
        projector_deviation,
    })
}

/// `c_q(d)` for `d = -q..q`, offset by `q`.
fn ramanujan_kernel(q: usize) -> Result<Vec<i64>> {
    (-(q as i64)..q as i64)
        .map(|d| ramanujan_sum(q as u64, d))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LockExpectation {
    pub q: usize,
    pub beta: f64,
    pub range: LockRange,
    /// `(π/q²)·Σ_{n,l} c_q(l - n)·exp(iβ(n - l))`, real part.
    pub closed_form: f64,
    pub imaginary_residue: f64,
    /// `Σ_{gcd(k,q)=1} θ'_k |⟨θ'_k|f⟩|²`.
    pub spectral: f64,
}

pub fn lock_expectation(q: usize, beta: f64, range: LockRange) -> Result<LockExpectation> {
    check_dimension(q)?;
    let kernel = ramanujan_kernel(q)?;
    let len = range.len(q)?;
    let sum = compensated_sum((0..len).flat_map(|n| {
        let kernel = &kernel;
        (0..len).map(move |l| {
            let c = kernel[l + q - n] as f64;
            Complex64::from_polar(c, beta * (n as f64 - l as f64))
        })
    }));
    let closed = sum * (PI / (q * q) as f64);
    let f = PureState::new(q, beta).amplitudes;
    let spectral = coprime_indices(q)
        .map(|k| {
            let overlap = compensated_sum(
                fourier_vector(q, k)
                    .iter()
                    .zip(&f)
                    .map(|(v, u)| v.conj() * u),
            );
            TAU * k as f64 / q as f64 * overlap.norm_sqr()
        })
        .sum();
    Ok(LockExpectation {
        q,
        beta,
        range,
        closed_form: closed.re,
        imaginary_residue: closed.im.abs(),
        spectral,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseSweepRow {
    pub q: usize,
    pub expectation_closed_form: f64,
    pub expectation_spectral: f64,
    /// `π·Λ(q)/ln q` at prime powers.
    pub mangoldt_reference: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseSweep {
    pub beta: f64,
    pub range: LockRange,
    pub rows: Vec<PhaseSweepRow>,
}

pub fn lock_sweep(qmin: usize, qmax: usize, beta: f64, range: LockRange) -> Result<PhaseSweep> {
    check_dimension(qmin)?;
    let rows = (qmin..=qmax)
        .into_par_iter()
        .map(|q| {
            let e = lock_expectation(q, beta, range)?;
            let lambda = mangoldt(q as u64)?;
            Ok(PhaseSweepRow {
                q,
                expectation_closed_form: e.closed_form,
                expectation_spectral: e.spectral,
                mangoldt_reference: (lambda > 0.0).then(|| PI * lambda / (q as f64).ln()),
            })
        })
        .collect::<Result<_>>()?;
    Ok(PhaseSweep { beta, range, rows })
}

impl PhaseSweep {
    /// Values of `q` whose closed-form expectation exceeds both neighbours.
    pub fn interior_local_maxima(&self) -> Vec<usize> {
        self.rows
            .windows(3)
            .filter(|w| {
                w[1].expectation_closed_form > w[0].expectation_closed_form
                    && w[1].expectation_closed_form > w[2].expectation_closed_form
            })
            .map(|w| w[1].q)
            .collect()
    }

    /// Pearson correlation of the closed form with the Mangoldt reference over prime powers.
    pub fn mangoldt_correlation(&self) -> Option<f64> {
        let pairs: Vec<(f64, f64)> = self
            .rows
            .iter()
            .filter_map(|r| r.mangoldt_reference.map(|m| (r.expectation_closed_form, m)))
            .collect();
        pearson(&pairs)
    }
}

pub fn pearson(pairs: &[(f64, f64)]) -> Option<f64> {
    let n = pairs.len() as f64;
    if pairs.len() < 2 {
        return None;
    }
    let (mx, my) = pairs
        .iter()
        .fold((0.0, 0.0), |(sx, sy), (x, y)| (sx + x / n, sy + y / n));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in pairs {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    (sxx > 0.0 && syy > 0.0).then(|| sxy / (sxx * syy).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaloisExpectation {
    pub q: u32,
    pub a: u32,
    pub k: u64,
    pub beta: f64,
    /// `(2π/q³)·Σ_{m,n} ψ_k(m - n)·exp(i(n - m)β)·ω_p^{tr(a(m² - n²))}·S(m, n)`, real part.
    pub value: f64,
    pub imaginary_residue: f64,
    /// The `m = n` terms alone, equal to `π(q-1)/q`.
    pub diagonal: f64,
    /// `⟨f|Θ|f⟩` from the spectral operator.
    pub direct: f64,
}

pub fn galois_expectation(
    field: &FieldSpec,
    a: FieldElement,
    k: u64,
    beta: f64,
) -> Result<GaloisExpectation> {
    if field.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !field.contains(a) {
        return Err(Error::MixedFields);
    }
    let q = field.q() as usize;
    let p = field.p() as u64;
    let k = k % q as u64;
    let s_by_diff: Vec<Complex64> = (0..q as u32).map(|d| s_sum_idx(field, d)).collect();
    let squares: Vec<u32> = (0..q as u32).map(|n| field.mul_idx(n, n)).collect();
    let term = |m: usize, n: usize| {
        let index_diff = (m as i64 - n as i64).rem_euclid(q as i64) as u64;
        let psi = unit_root((k * index_diff % q as u64) as i64, q as u64);
        let phase = Complex64::from_polar(1.0, (n as f64 - m as f64) * beta);
        let t = field.trace_idx(field.mul_idx(a.index(), field.sub_idx(squares[m], squares[n])));
        let s = s_by_diff[field.sub_idx(m as u32, n as u32) as usize];
        psi * phase * unit_root(t as i64, p) * s
    };
    let prefactor = TAU / (q * q * q) as f64;
    let total = compensated_sum((0..q).flat_map(|m| (0..q).map(move |n| term(m, n)))) * prefactor;
    let diagonal = compensated_sum((0..q).map(|n| term(n, n))) * prefactor;
    let operator = galois_phase_operator(field, a, k)?;
    let direct = operator
        .spectral
        .expectation(&PureState::new(q, beta).amplitudes)?;
    Ok(GaloisExpectation {
        q: q as u32,
        a: a.index(),
        k,
        beta,
        value: total.re,
        imaginary_residue: total.im.abs(),
        diagonal: diagonal.re,
        direct: direct.re,
    })
}
