use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{compensated_sum, i_pow, Carrier, CharacterKind, CharacterSpec, TrivialConvention};
use crate::error::{Error, Result};
use crate::gf::{FieldSpec, FqPoly};
use crate::gring::{RingElement, RingSpec};

fn field_character<'c>(
    spec: &'c CharacterSpec<'_>,
    field: &FieldSpec,
    kinds: &[CharacterKind],
) -> Result<&'c CharacterSpec<'c>> {
    if !kinds.contains(&spec.kind()) {
        return Err(Error::WrongCharacterKind(spec.kind().to_string()));
    }
    match spec.carrier() {
        Carrier::Field(f) if f.id() == field.id() => Ok(spec),
        _ => Err(Error::WrongCarrier),
    }
}

/// `Σ_{x ∈ F_q} κ(f(x))`.
pub fn weil_sum(field: &FieldSpec, f: &FqPoly, kappa: &CharacterSpec<'_>) -> Result<Complex64> {
    let kappa = field_character(kappa, field, &[CharacterKind::AdditiveField])?;
    if f.degree().unwrap_or(0) < 1 {
        return Err(Error::InvalidPolynomial("Weil sum needs deg f >= 1".into()));
    }
    let terms: Result<Vec<Complex64>> = (0..field.q())
        .map(|x| kappa.eval_field(field, f.eval_idx(field, x)))
        .collect();
    Ok(compensated_sum(terms?))
}

/// `(d-1)·√q`.
pub fn weil_bound(degree: usize, q: u32) -> f64 {
    (degree.saturating_sub(1)) as f64 * (q as f64).sqrt()
}

#[derive(Debug, Clone, Serialize)]
pub struct WeilSample {
    pub degree: usize,
    /// Coefficient indices, lowest degree first.
    pub coefficients: Vec<u32>,
    /// Index of `c` in the character `ω^{tr(c x)}`.
    pub character: u32,
    pub value: Complex64,
    pub magnitude: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeilSweep {
    pub q: u32,
    pub seed: u64,
    pub samples: Vec<WeilSample>,
    pub all_pass: bool,
}

/// Random polynomials with degree prime to `p` and random nontrivial characters,
/// each sum checked against `(d-1)√q + tolerance`.
pub fn weil_sweep(
    field: &FieldSpec,
    count: usize,
    max_degree: usize,
    seed: u64,
    tolerance: f64,
) -> Result<WeilSweep> {
    let degrees: Vec<usize> = (1..=max_degree)
        .filter(|d| d % field.p() as usize != 0)
        .collect();
    if degrees.is_empty() {
        return Err(Error::InvalidPolynomial(format!(
            "no degree in 1..={max_degree} is prime to {}",
            field.p()
        )));
    }
    let q = field.q();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(Vec<u32>, u32)> = (0..count)
        .map(|_| {
            let d = degrees[rng.gen_range(0..degrees.len())];
            let mut coeffs: Vec<u32> = (0..d).map(|_| rng.gen_range(0..q)).collect();
            coeffs.push(rng.gen_range(1..q));
            (coeffs, rng.gen_range(1..q))
        })
        .collect();
    let samples: Result<Vec<WeilSample>> = draws
        .into_par_iter()
        .map(|(coeffs, c)| {
            let f = FqPoly::new(field, coeffs.clone())?;
            let kappa = CharacterSpec::additive_field(field, field.element(c)?)?;
            let value = weil_sum(field, &f, &kappa)?;
            let degree = coeffs.len() - 1;
            let bound = weil_bound(degree, q);
            Ok(WeilSample {
                degree,
                coefficients: coeffs,
                character: c,
                value,
                magnitude: value.norm(),
                bound,
                pass: value.norm() <= bound + tolerance,
            })
        })
        .collect();
    let samples = samples?;
    Ok(WeilSweep {
        q,
        seed,
        all_pass: samples.iter().all(|s| s.pass),
        samples,
    })
}

/// `Σ ψ(f(x))·κ(g(x))`.
///
/// With both polynomials omitted the sum runs over `F_q*` with `f = g = x`.
/// Otherwise a missing one defaults to `x`, the sum runs over `F_q`, and
/// points with `f(x) = 0` are skipped. `psi` may be multiplicative or an
/// index phase; `kappa` must be additive.
pub fn gauss_sum_field(
    field: &FieldSpec,
    psi: &CharacterSpec<'_>,
    kappa: &CharacterSpec<'_>,
    f: Option<&FqPoly>,
    g: Option<&FqPoly>,
) -> Result<Complex64> {
    let psi = field_character(
        psi,
        field,
        &[
            CharacterKind::MultiplicativeField,
            CharacterKind::IndexPhase,
        ],
    )?;
    let kappa = field_character(kappa, field, &[CharacterKind::AdditiveField])?;
    let identity = FqPoly::x();
    let f = f.unwrap_or(&identity);
    let g = g.unwrap_or(&identity);
    let mut terms = Vec::with_capacity(field.q() as usize);
    for x in 0..field.q() {
        let fx = f.eval_idx(field, x);
        if fx == 0 {
            continue;
        }
        terms.push(psi.eval_field(field, fx)? * kappa.eval_field(field, g.eval_idx(field, x))?);
    }
    Ok(compensated_sum(terms))
}

/// `Σ_{u ∈ T} i^{gtrace(y u)}` over the Teichmüller set.
pub fn gamma_sum(ring: &RingSpec, y: RingElement) -> Result<Complex64> {
    if !ring.contains(y) {
        return Err(Error::MixedRings);
    }
    let terms: Result<Vec<Complex64>> = ring
        .teichmuller()
        .map(|u| Ok(i_pow(ring.gtrace(ring.mul(y, u))?)))
        .collect();
    Ok(compensated_sum(terms?))
}

/// Magnitude of the Teichmüller sum predicted by the trichotomy:
/// `2^m` at zero, 0 on `2T \ {0}`, `√(2^m)` elsewhere.
pub fn gamma_expected_magnitude(ring: &RingSpec, y: RingElement) -> Result<f64> {
    let full = (1u64 << ring.m()) as f64;
    if y.is_zero() {
        return Ok(full);
    }
    let form = ring.two_adic_decompose(y)?;
    Ok(if form.a.is_zero() { 0.0 } else { full.sqrt() })
}

/// `Σ_{x ∈ R} ψ(x)·i^{gtrace(y x)}` with `ψ` a unit-group character.
pub fn gauss_sum_ring(
    ring: &RingSpec,
    psi: &CharacterSpec<'_>,
    y: RingElement,
    convention: TrivialConvention,
) -> Result<Complex64> {
    if psi.kind() != CharacterKind::RingUnit {
        return Err(Error::WrongCharacterKind(psi.kind().to_string()));
    }
    match psi.carrier() {
        Carrier::Ring(r) if r.id() == ring.id() => {}
        _ => return Err(Error::WrongCarrier),
    }
    if !ring.contains(y) {
        return Err(Error::MixedRings);
    }
    let terms: Result<Vec<Complex64>> = ring
        .elements()
        .map(|x| {
            let weight = psi.evaluate_with(x, convention)?;
            if weight == Complex64::new(0.0, 0.0) {
                return Ok(weight);
            }
            Ok(weight * i_pow(ring.gtrace(ring.mul(y, x))?))
        })
        .collect();
    Ok(compensated_sum(terms?))
}
