//! Arithmetic functions (Möbius, Euler totient, von Mangoldt), Ramanujan sums
//! and integer cyclotomic polynomials.
//!
//! All functions are pure and work on `u64` arguments with trial-division
//! factorization, which is adequate up to about 10^9.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Prime factorization `n = ∏ p_i^{e_i}` as `(p_i, e_i)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).first() == Some(&(n, 1))
}

/// Returns `(p, k)` when `n = p^k` with `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Sorted list of the positive divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Möbius function. `mobius(1) == 1`.
pub fn mobius(n: u64) -> Result<i32> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1)))
}

/// Von Mangoldt function: `ln p` when `n = p^k`, otherwise 0.
pub fn mangoldt(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(prime_power(n).map_or(0.0, |(p, _)| (p as f64).ln()))
}

/// Ramanujan sum `c_q(n) = μ(q₁) φ(q) / φ(q₁)` with `q₁ = q / gcd(q, n)`.
///
/// Negative `n` reduces to `|n| mod q`; the sum is even and `q`-periodic in `n`.
pub fn ramanujan_sum(q: u64, n: i64) -> Result<i64> {
    if q == 0 {
        return Err(Error::ZeroArgument);
    }
    let r = n.unsigned_abs() % q;
    let q1 = q / gcd(q, r);
    let value = mobius(q1)? as i64 * (totient(q)? / totient(q1)?) as i64;
    Ok(value)
}

/// Summary of the three arithmetic functions at a single argument.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArithmeticProfile {
    pub n: u64,
    pub mobius: i32,
    pub totient: u64,
    pub mangoldt: f64,
    pub is_prime_power: bool,
}

impl ArithmeticProfile {
    pub fn of(n: u64) -> Result<Self> {
        Ok(Self {
            n,
            mobius: mobius(n)?,
            totient: totient(n)?,
            mangoldt: mangoldt(n)?,
            is_prime_power: prime_power(n).is_some(),
        })
    }
}

/// Dense polynomial with integer coefficients, lowest degree first.
///
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case `coeffs` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = -1;
        c[n] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0) - other.coeffs.get(i).copied().unwrap_or(0)
            })
            .collect();
        Self::new(c)
    }

    /// Exact division by a monic divisor. Returns `None` when a nonzero remainder is left.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if divisor.coeffs[dd] != 1 {
            return None;
        }
        let Some(nd) = self.degree() else {
            return Some(Self::zero());
        };
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd];
            quot[i] = c;
            if c != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= c * d;
                }
            }
        }
        rem.iter().all(|&c| c == 0).then(|| Self::new(quot))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let body = match (i, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{mag}x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{mag}x^{i}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// The `n`-th cyclotomic polynomial, `∏_{d | n} (x^d - 1)^{μ(n/d)}`.
///
/// Computed with exact integer arithmetic: numerator factors are multiplied,
/// then the denominator factors are divided out.
pub fn cyclotomic_poly(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut num = IntPolynomial::one();
    let mut den = Vec::new();
    for d in divisors(n) {
        match mobius(n / d)? {
            1 => num = num.mul(&IntPolynomial::x_pow_minus_one(d as usize)),
            -1 => den.push(IntPolynomial::x_pow_minus_one(d as usize)),
            _ => {}
        }
    }
    for d in &den {
        // x^d - 1 is monic and the Möbius product is a polynomial, so this is exact.
        num = num
            .div_exact(d)
            .expect("cyclotomic product divides exactly");
    }
    Ok(num)
}
