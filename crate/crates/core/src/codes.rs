//! Cyclic codes over `F_q` as ideals of `F_q[x]/(x^n - 1)`, exhaustive
//! distance analysis, and the projective-plane structure of their cyclic
//! extension matrices.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{factor_squarefree, FieldSpec, FqPoly};
use crate::numtheory::gcd;

/// Exhaustive enumeration bound on `q^k`.
pub const MAX_CODEWORDS: u64 = 1 << 22;

/// All monic divisors of `x^n - 1` over `F_q`, for `n` prime to `p`.
///
/// Ordered by the bitmask of irreducible factors used, the factors
/// themselves sorted by degree; the first entry is `1`, the last `x^n - 1`.
pub fn xn1_divisors(n: usize, field: &FieldSpec) -> Result<Vec<FqPoly>> {
    if n == 0 || gcd(n as u64, field.p() as u64) != 1 {
        return Err(Error::UnsupportedLength { n, p: field.p() });
    }
    let target = FqPoly::x_pow_minus_one(field, n);
    let factors = xn1_factors(n, field)?;
    let divisors: Vec<FqPoly> = (0u64..1 << factors.len())
        .map(|mask| {
            factors
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(FqPoly::one(), |acc, (_, f)| acc.mul(field, f))
        })
        .collect();
    debug_assert_eq!(divisors.last(), Some(&target));
    Ok(divisors)
}

/// Monic irreducible factors of `x^n - 1`, checked by multiplying back.
pub fn xn1_factors(n: usize, field: &FieldSpec) -> Result<Vec<FqPoly>> {
    if n == 0 || gcd(n as u64, field.p() as u64) != 1 {
        return Err(Error::UnsupportedLength { n, p: field.p() });
    }
    let target = FqPoly::x_pow_minus_one(field, n);
    let factors = factor_squarefree(field, &target);
    let product = factors
        .iter()
        .fold(FqPoly::one(), |acc, f| acc.mul(field, f));
    if product != target {
        return Err(Error::InvalidPolynomial(format!(
            "factorization of x^{n}-1 does not multiply back"
        )));
    }
    Ok(factors)
}

/// An `[n, k]` cyclic code with generator polynomial `g`.
#[derive(Debug, Clone)]
pub struct LinearCode<'a> {
    pub n: usize,
    pub k: usize,
    pub field: &'a FieldSpec,
    pub g: FqPoly,
    /// Rows `g, xg, …, x^{k-1}g`, coefficient of `x^0` leftmost.
    pub generator_matrix: Vec<Vec<u32>>,
}

fn check_generator(n: usize, field: &FieldSpec, g: &FqPoly) -> Result<()> {
    if g.is_zero() || !g.is_monic() {
        return Err(Error::InvalidPolynomial(format!(
            "generator {} must be monic",
            g.display()
        )));
    }
    if g.degree().unwrap_or(0) >= n {
        return Err(Error::InvalidPolynomial(format!(
            "generator {} must have degree below {n}",
            g.display()
        )));
    }
    if !FqPoly::x_pow_minus_one(field, n).rem(field, g).is_zero() {
        return Err(Error::NotADivisor { n });
    }
    Ok(())
}

fn padded(g: &FqPoly, n: usize, shift: usize) -> Vec<u32> {
    let mut row = vec![0u32; n];
    for (i, &c) in g.coeffs().iter().enumerate() {
        row[(i + shift) % n] = c;
    }
    row
}

pub fn cyclic_code<'a>(n: usize, field: &'a FieldSpec, g: &FqPoly) -> Result<LinearCode<'a>> {
    check_generator(n, field, g)?;
    let k = n - g.degree().unwrap_or(0);
    Ok(LinearCode {
        n,
        k,
        field,
        g: g.clone(),
        generator_matrix: (0..k).map(|shift| padded(g, n, shift)).collect(),
    })
}

/// All `n` cyclic shifts of `g`'s coefficient vector.
pub fn cyclic_extension_matrix(n: usize, field: &FieldSpec, g: &FqPoly) -> Result<Vec<Vec<u32>>> {
    check_generator(n, field, g)?;
    Ok((0..n).map(|shift| padded(g, n, shift)).collect())
}

impl LinearCode<'_> {
    /// Number of codewords `q^k`, saturating.
    pub fn size(&self) -> u64 {
        (self.field.q() as u64).saturating_pow(self.k as u32)
    }

    fn check_size(&self) -> Result<()> {
        let q = self.field.q();
        match (q as u64).checked_pow(self.k as u32) {
            Some(size) if size <= MAX_CODEWORDS => Ok(()),
            _ => Err(Error::CodeTooLarge { q, k: self.k }),
        }
    }

    /// The F_p-spanning set `{x^j·row_i}`, using the polynomial basis of `F_q`.
    fn prime_field_generators(&self) -> Vec<Vec<u32>> {
        let field = self.field;
        let scalars: Vec<u32> = (0..field.m()).map(|j| field.p().pow(j)).collect();
        self.generator_matrix
            .iter()
            .flat_map(|row| {
                scalars
                    .iter()
                    .map(move |&s| row.iter().map(|&c| field.mul_idx(s, c)).collect())
            })
            .collect()
    }

    /// Calls `visit` on every codeword, zero included.
    pub fn for_each_codeword<F: FnMut(&[u32])>(&self, mut visit: F) -> Result<()> {
        self.check_size()?;
        let generators = self.prime_field_generators();
        let start = vec![0u32; self.n];
        odometer(self.field, &generators, start, &mut visit);
        Ok(())
    }

    /// `A_w` for `w = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.check_size()?;
        let field = self.field;
        let p = field.p();
        let generators = self.prime_field_generators();
        let split = split_depth(p as u64, generators.len());
        let (outer, inner) = generators.split_at(generators.len() - split);
        let prefixes = (p as u64).pow(split as u32);
        let partials: Vec<Vec<u64>> = (0..prefixes)
            .into_par_iter()
            .map(|prefix| {
                let mut start = vec![0u32; self.n];
                let mut rest = prefix;
                for v in inner {
                    let digit = (rest % p as u64) as u32;
                    rest /= p as u64;
                    for _ in 0..digit {
                        add_assign(field, &mut start, v);
                    }
                }
                let mut counts = vec![0u64; self.n + 1];
                odometer(field, outer, start, &mut |word: &[u32]| {
                    counts[word.iter().filter(|&&c| c != 0).count()] += 1;
                });
                counts
            })
            .collect();
        let mut counts = vec![0u64; self.n + 1];
        for partial in partials {
            for (total, c) in counts.iter_mut().zip(partial) {
                *total += c;
            }
        }
        Ok(counts)
    }

    pub fn min_distance(&self) -> Result<DistanceReport> {
        let distribution = self.weight_distribution()?;
        let d_min = distribution
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
            .expect("a code of dimension >= 1 has a nonzero codeword");
        let singleton = self.n - self.k + 1;
        Ok(DistanceReport {
            n: self.n,
            k: self.k,
            q: self.field.q(),
            d_min,
            correct_up_to: (d_min - 1) / 2,
            detect_up_to: d_min - 1,
            singleton_gap: singleton - d_min,
            is_mds: singleton == d_min,
            weight_distribution: distribution,
        })
    }
}

/// Number of trailing generators enumerated as parallel prefixes.
fn split_depth(p: u64, generators: usize) -> usize {
    let mut depth = 0;
    while depth < generators && p.pow(depth as u32) < 64 {
        depth += 1;
    }
    depth.min(generators.saturating_sub(1))
}

fn add_assign(field: &FieldSpec, word: &mut [u32], v: &[u32]) {
    for (w, &c) in word.iter_mut().zip(v) {
        *w = field.add_idx(*w, c);
    }
}

/// Visits `start + Σ d_t v_t` for all digit vectors `d ∈ F_p^len`. Each
/// step adds one generator; `p` additions of `v_t` return to the prior
/// word, which is when the next digit is carried.
fn odometer<F: FnMut(&[u32])>(
    field: &FieldSpec,
    generators: &[Vec<u32>],
    start: Vec<u32>,
    visit: &mut F,
) {
    let p = field.p();
    let mut word = start;
    let mut digits = vec![0u32; generators.len()];
    visit(&word);
    'outer: loop {
        let mut t = 0;
        loop {
            if t == generators.len() {
                break 'outer;
            }
            add_assign(field, &mut word, &generators[t]);
            digits[t] += 1;
            if digits[t] < p {
                break;
            }
            digits[t] = 0;
            t += 1;
        }
        visit(&word);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d_min: usize,
    pub correct_up_to: usize,
    pub detect_up_to: usize,
    /// `(n - k + 1) - d_min`
    pub singleton_gap: usize,
    pub is_mds: bool,
    pub weight_distribution: Vec<u64>,
}

/// Projective-plane axioms for a square 0/1 incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneAxiomsReport {
    pub n: usize,
    pub is_square_binary: bool,
    /// Common row sum, if all rows agree.
    pub row_sum: Option<usize>,
    pub column_sum: Option<usize>,
    pub rows_meet_once: bool,
    pub columns_meet_once: bool,
    /// `n = s² - s + 1`
    pub size_matches: bool,
    /// `s - 1` when every axiom holds.
    pub order: Option<usize>,
    pub pass: bool,
}

pub fn plane_axioms_check(matrix: &[Vec<u32>]) -> PlaneAxiomsReport {
    let n = matrix.len();
    let is_square_binary = matrix
        .iter()
        .all(|r| r.len() == n && r.iter().all(|&c| c <= 1));
    let uniform = |sums: Vec<usize>| {
        let first = *sums.first()?;
        sums.iter().all(|&s| s == first).then_some(first)
    };
    let (row_sum, column_sum, rows_meet_once, columns_meet_once) = if is_square_binary {
        let at = |i: usize, j: usize| matrix[i][j] == 1;
        let row_sums = (0..n)
            .map(|i| (0..n).filter(|&j| at(i, j)).count())
            .collect();
        let col_sums = (0..n)
            .map(|j| (0..n).filter(|&i| at(i, j)).count())
            .collect();
        let pairs_meet_once = |meet: &dyn Fn(usize, usize) -> usize| {
            (0..n).all(|a| (a + 1..n).all(|b| meet(a, b) == 1))
        };
        let rows = pairs_meet_once(&|a, b| (0..n).filter(|&j| at(a, j) && at(b, j)).count());
        let cols = pairs_meet_once(&|a, b| (0..n).filter(|&i| at(i, a) && at(i, b)).count());
        (uniform(row_sums), uniform(col_sums), rows, cols)
    } else {
        (None, None, false, false)
    };
    let size_matches = match row_sum {
        Some(s) if s >= 1 => n == s * s - s + 1,
        _ => false,
    };
    let pass = is_square_binary
        && row_sum.is_some()
        && row_sum == column_sum
        && rows_meet_once
        && columns_meet_once
        && size_matches
        && row_sum.is_some_and(|s| s >= 3);
    PlaneAxiomsReport {
        n,
        is_square_binary,
        row_sum,
        column_sum,
        rows_meet_once,
        columns_meet_once,
        size_matches,
        order: if pass { row_sum.map(|s| s - 1) } else { None },
        pass,
    }
}
