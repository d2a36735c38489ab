//! Dense polynomials over a [`FieldSpec`], with Rabin irreducibility testing
//! and Cantor–Zassenhaus factorization of squarefree polynomials.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FieldElement, FieldSpec};
use crate::error::{Error, Result};
use crate::numtheory::factorize;

/// Polynomial over `F_q`, coefficients stored as canonical element indices,
/// lowest degree first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqPoly {
    coeffs: Vec<u32>,
}

impl FqPoly {
    /// Validates every coefficient against the field.
    pub fn new(field: &FieldSpec, coeffs: Vec<u32>) -> Result<Self> {
        if let Some(&c) = coeffs.iter().find(|&&c| c >= field.q()) {
            return Err(Error::InvalidPolynomial(format!(
                "coefficient index {c} is outside F_{}",
                field.q()
            )));
        }
        Ok(Self::from_indices(coeffs))
    }

    pub fn from_elements(field: &FieldSpec, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.iter().any(|&c| !field.contains(c)) {
            return Err(Error::MixedFields);
        }
        Ok(Self::from_indices(
            coeffs.iter().map(|c| c.index()).collect(),
        ))
    }

    pub(crate) fn from_indices(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    /// `x^n - 1` over the given field.
    pub fn x_pow_minus_one(field: &FieldSpec, n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = field.neg_idx(1);
        c[n] = field.add_idx(c[n], 1);
        Self::from_indices(c)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, field: &FieldSpec, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_indices(
            (0..len)
                .map(|i| field.add_idx(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, field: &FieldSpec, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_indices(
            (0..len)
                .map(|i| field.sub_idx(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn mul(&self, field: &FieldSpec, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add_idx(out[i + j], field.mul_idx(a, b));
            }
        }
        Self::from_indices(out)
    }

    pub fn scale(&self, field: &FieldSpec, c: u32) -> Self {
        Self::from_indices(self.coeffs.iter().map(|&a| field.mul_idx(a, c)).collect())
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is returned unchanged.
    pub fn monic(&self, field: &FieldSpec) -> Self {
        match field.inv_idx(self.leading()) {
            Some(inv) => self.scale(field, inv),
            None => self.clone(),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, field: &FieldSpec, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lead = field
            .inv_idx(divisor.leading())
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = field.mul_idx(rem[i + dd], inv_lead);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = field.sub_idx(rem[i + j], field.mul_idx(c, d));
            }
        }
        rem.truncate(dd);
        (Self::from_indices(quot), Self::from_indices(rem))
    }

    pub fn rem(&self, field: &FieldSpec, divisor: &Self) -> Self {
        self.divrem(field, divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, field: &FieldSpec, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(field, &b);
            a = b;
            b = r;
        }
        a.monic(field)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, field: &FieldSpec, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(field, modulus);
        let mut acc = Self::one().rem(field, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(field, &base).rem(field, modulus);
            }
            base = base.mul(field, &base).rem(field, modulus);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn eval_idx(&self, field: &FieldSpec, x: u32) -> u32 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| field.add_idx(field.mul_idx(acc, x), c))
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, field: &FieldSpec, x: FieldElement) -> FieldElement {
        assert!(field.contains(x), "operand belongs to a different field");
        field.wrap(self.eval_idx(field, x.index()))
    }

    /// Human-readable form with coefficients printed as canonical indices.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, _) => c.to_string(),
                (1, 1) => "x".into(),
                (1, _) => format!("{c}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        terms.join("+")
    }
}

/// `x^(q^k) mod f`, by repeated q-th powering.
fn frobenius_power_of_x(field: &FieldSpec, f: &FqPoly, k: u32) -> FqPoly {
    let q = field.q() as u64;
    (0..k).fold(FqPoly::x().rem(field, f), |h, _| h.pow_mod(field, q, f))
}

/// Rabin test: `f` of degree `d` is irreducible over `F_q` iff
/// `x^(q^d) ≡ x (mod f)` and `gcd(x^(q^(d/r)) - x, f) = 1` for every prime `r | d`.
pub fn is_irreducible(field: &FieldSpec, f: &FqPoly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = FqPoly::x();
    if frobenius_power_of_x(field, f, d as u32) != x.rem(field, f) {
        return false;
    }
    factorize(d as u64).into_iter().all(|(r, _)| {
        let h = frobenius_power_of_x(field, f, (d as u64 / r) as u32).sub(field, &x);
        h.gcd(field, f).degree() == Some(0)
    })
}

/// Monic irreducible factors of a squarefree polynomial, sorted by degree then coefficients.
///
/// Distinct-degree splitting followed by Cantor–Zassenhaus equal-degree
/// splitting; the randomized step uses a fixed seed so runs are reproducible.
pub fn factor_squarefree(field: &FieldSpec, f: &FqPoly) -> Vec<FqPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a09_e667);
    let mut out = Vec::new();
    let mut rest = f.monic(field);
    let x = FqPoly::x();
    let mut h = x.clone();
    let mut d = 0u32;
    while rest.degree().unwrap_or(0) >= 2 * (d as usize + 1) {
        d += 1;
        h = h.pow_mod(field, field.q() as u64, &rest);
        let g = h.sub(field, &x).gcd(field, &rest);
        if g.degree().unwrap_or(0) > 0 {
            equal_degree_split(field, &g, d as usize, &mut rng, &mut out);
            rest = rest.divrem(field, &g).0;
            h = h.rem(field, &rest);
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push(rest.monic(field));
    }
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    out
}

fn equal_degree_split(
    field: &FieldSpec,
    f: &FqPoly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<FqPoly>,
) {
    let n = f.degree().unwrap_or(0);
    if n == d {
        out.push(f.monic(field));
        return;
    }
    loop {
        let a = FqPoly::from_indices((0..n).map(|_| rng.gen_range(0..field.q())).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let candidate = splitting_map(field, &a, d, f);
        let g = candidate.gcd(field, f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            equal_degree_split(field, &g, d, rng, out);
            equal_degree_split(field, &f.divrem(field, &g).0, d, rng, out);
            return;
        }
    }
}

/// For odd q: `a^((q^d - 1)/2) - 1`, computed as `N(a)^((q-1)/2) - 1` with
/// `N(a) = a·a^q·…·a^(q^(d-1))`. For even q: the trace `Σ_{j < k·d} a^(2^j)`
/// where `q = 2^k`. Either splits a product of degree-d factors with
/// probability about one half.
fn splitting_map(field: &FieldSpec, a: &FqPoly, d: usize, f: &FqPoly) -> FqPoly {
    let q = field.q() as u64;
    if field.p() == 2 {
        let steps = field.m() as usize * d;
        let mut term = a.rem(field, f);
        let mut acc = term.clone();
        for _ in 1..steps {
            term = term.mul(field, &term).rem(field, f);
            acc = acc.add(field, &term);
        }
        acc
    } else {
        let mut term = a.rem(field, f);
        let mut norm = term.clone();
        for _ in 1..d {
            term = term.pow_mod(field, q, f);
            norm = norm.mul(field, &term).rem(field, f);
        }
        norm.pow_mod(field, (q - 1) / 2, f)
            .sub(field, &FqPoly::one())
    }
}
