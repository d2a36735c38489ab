//! Galois fields `F_{p^m}` realized as `F_p[x]/(g)`.
//!
//! Elements are stored by their canonical index `n = Σ c_i p^i`, where `c_i`
//! is the coefficient of `x^i` in the reduced representative. Index 0 is the
//! zero element and index 1 is the identity; the same index doubles as the
//! `|n⟩` label in the quantum constructions.
//!
//! With a primitive modulus, dense log/antilog tables are built up front and
//! multiplication is two lookups. A merely irreducible modulus is accepted
//! through [`FieldSpec::with_irreducible_modulus`]; such fields multiply by
//! polynomial reduction and have no discrete logarithm.

mod linalg;
mod poly;
mod table;

use std::fmt;

pub use linalg::{rank, row_reduce, RowEchelon};
pub use poly::{factor_squarefree, is_irreducible, FqPoly};
pub use table::{FieldTable, FieldTableRow};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, is_prime};

/// Upper bound on the field size `p^m`.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Identifies a concrete field realization (characteristic and modulus).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldId {
    p: u32,
    modulus_code: u64,
}

/// An element of a [`FieldSpec`], tagged with the field it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    index: u32,
    field: FieldId,
}

impl FieldElement {
    /// Canonical integer encoding `Σ c_i p^i`.
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn field_id(self) -> FieldId {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow,
}

/// Second operand of [`FieldSpec::field_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    Element(FieldElement),
    Exponent(i64),
    None,
}

/// A realized Galois field with its arithmetic tables.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    id: FieldId,
    primitive: bool,
    alpha: u32,
    /// `exp[t] = α^t` for `t < q-1`; empty when the modulus is not primitive.
    exp: Vec<u32>,
    /// `log[α^t] = t`; `log[0]` is unused.
    log: Vec<u32>,
    /// `tr(x^i)` for `i < m`; the trace is F_p-linear in the coefficients.
    basis_traces: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for FieldSpec {}

fn validate_params(p: u32, m: u32) -> Result<u32> {
    if !is_prime(p as u64) {
        return Err(Error::NonPrimeP(p as u64));
    }
    if m == 0 {
        return Err(Error::InvalidDegree(m));
    }
    let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE);
    q.map(|q| q as u32).ok_or(Error::FieldTooLarge { p, m })
}

fn validate_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<()> {
    if modulus.len() != m as usize + 1 {
        return Err(Error::InvalidPolynomial(format!(
            "modulus must have {} coefficients (degree {m}), got {}",
            m + 1,
            modulus.len()
        )));
    }
    if modulus[m as usize] != 1 {
        return Err(Error::InvalidPolynomial("modulus must be monic".into()));
    }
    if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidPolynomial(format!(
            "coefficient {c} is not reduced mod {p}"
        )));
    }
    Ok(())
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn decode(mut n: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = n % p;
            n /= p;
            d
        })
        .collect()
}

/// Successive powers `x^0, x^1, …` in `F_p[x]/(g)` until the sequence returns
/// to 1 or `limit` steps elapse. `g` is monic of degree `m`.
fn x_power_cycle(p: u32, modulus: &[u32], limit: u64) -> Vec<u32> {
    let m = modulus.len() - 1;
    let pw = p as u64;
    let mut digits = vec![0u32; m];
    digits[0] = 1;
    let mut seq = vec![1u32];
    for _ in 0..limit {
        // multiply by x: shift up and subtract top * g
        let neg_top = (pw - digits[m - 1] as u64) % pw;
        for i in (1..m).rev() {
            digits[i] = ((digits[i - 1] as u64 + neg_top * modulus[i] as u64) % pw) as u32;
        }
        digits[0] = (neg_top * modulus[0] as u64 % pw) as u32;
        let idx = encode(&digits, p);
        if idx == 1 {
            break;
        }
        seq.push(idx);
    }
    seq
}

impl FieldSpec {
    /// Builds `F_{p^m}`.
    ///
    /// Without a modulus, picks the first monic primitive polynomial of
    /// degree `m` in order of the integer code `Σ c_i p^i` of its lower
    /// coefficients (which yields `x^3+x+1` for `F_8` and `x^4+x+1` for `F_16`).
    /// A given modulus (lowest degree first, monic, `m+1` entries) must be primitive.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        let q = validate_params(p, m)?;
        match modulus {
            Some(g) => Self::from_modulus(p, m, q, g, false),
            None => Self::search_default(p, m, q),
        }
    }

    /// Prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// Builds the field of order `q` with its default modulus.
    pub fn with_order(q: u64) -> Result<Self> {
        match factorize(q).as_slice() {
            [(p, m)] if *p <= u32::MAX as u64 => Self::new(*p as u32, *m, None),
            [] => Err(Error::InvalidDegree(0)),
            _ => Err(Error::NonPrimeP(q)),
        }
    }

    /// Accepts an irreducible, possibly non-primitive modulus. Discrete
    /// logarithms and tables are unavailable unless the modulus happens to be
    /// primitive.
    pub fn with_irreducible_modulus(p: u32, m: u32, modulus: &[u32]) -> Result<Self> {
        let q = validate_params(p, m)?;
        Self::from_modulus(p, m, q, modulus, true)
    }

    fn search_default(p: u32, m: u32, q: u32) -> Result<Self> {
        let lower_count = q; // p^m choices of the m lower coefficients
        for code in 1..lower_count {
            let mut g = decode(code, p, m);
            if g[0] == 0 {
                continue;
            }
            g.push(1);
            let cycle = x_power_cycle(p, &g, (q - 1) as u64);
            if cycle.len() == (q - 1) as usize {
                return Ok(Self::assemble(p, m, q, g, Some(cycle)));
            }
        }
        // Every finite field has a primitive polynomial of each degree.
        unreachable!("no primitive polynomial of degree {m} over F_{p}")
    }

    fn from_modulus(p: u32, m: u32, q: u32, g: &[u32], allow_non_primitive: bool) -> Result<Self> {
        validate_modulus(p, m, g)?;
        if m > 1 {
            let base = Self::prime(p)?;
            let poly = FqPoly::from_indices(g.to_vec());
            if !is_irreducible(&base, &poly) {
                return Err(Error::NotIrreducible { p });
            }
        }
        let g = g.to_vec();
        if g[0] == 0 {
            // only reachable for m == 1: the modulus x has root 0
            return Err(Error::NotPrimitive {
                order: 0,
                expected: (q - 1) as u64,
            });
        }
        let cycle = x_power_cycle(p, &g, (q - 1) as u64);
        if cycle.len() == (q - 1) as usize {
            Ok(Self::assemble(p, m, q, g, Some(cycle)))
        } else if allow_non_primitive {
            Ok(Self::assemble(p, m, q, g, None))
        } else {
            Err(Error::NotPrimitive {
                order: cycle.len() as u64,
                expected: (q - 1) as u64,
            })
        }
    }

    fn assemble(p: u32, m: u32, q: u32, modulus: Vec<u32>, cycle: Option<Vec<u32>>) -> Self {
        let modulus_code = modulus
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * p as u64 + c as u64);
        let id = FieldId { p, modulus_code };
        let (primitive, exp, log) = match cycle {
            Some(exp) => {
                let mut log = vec![0u32; q as usize];
                for (t, &e) in exp.iter().enumerate() {
                    log[e as usize] = t as u32;
                }
                (true, exp, log)
            }
            None => (false, Vec::new(), Vec::new()),
        };
        let alpha = if m == 1 { (p - modulus[0]) % p } else { p };
        let mut spec = Self {
            p,
            m,
            q,
            modulus,
            id,
            primitive,
            alpha,
            exp,
            log,
            basis_traces: Vec::new(),
        };
        spec.basis_traces = (0..m).map(|i| spec.trace_direct(p.pow(i))).collect();
        spec
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn id(&self) -> FieldId {
        self.id
    }

    /// Modulus coefficients, lowest degree first (monic, `m+1` entries).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// Canonical index of the class of `x`, the generator when the modulus is primitive.
    pub fn primitive_element_index(&self) -> u32 {
        self.alpha
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index >= self.q {
            return Err(Error::ElementOutOfRange {
                index: index as u64,
                size: self.q as u64,
            });
        }
        Ok(self.wrap(index))
    }

    pub(crate) fn wrap(&self, index: u32) -> FieldElement {
        debug_assert!(index < self.q);
        FieldElement {
            index,
            field: self.id,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    /// The class `[x]`.
    pub fn alpha(&self) -> FieldElement {
        self.wrap(self.alpha)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.wrap(i))
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.field == self.id && x.index < self.q
    }

    /// Coefficient tuple, `x^i` at position `i`.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        decode(x.index, self.p, self.m)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.m as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidPolynomial(format!(
                "{coeffs:?} is not a reduced element of F_{}",
                self.q
            )));
        }
        Ok(self.wrap(encode(coeffs, self.p)))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        self.wrap(n.rem_euclid(self.p as i64) as u32)
    }

    fn check(&self, x: FieldElement) -> Result<u32> {
        if self.contains(x) {
            Ok(x.index)
        } else {
            Err(Error::MixedFields)
        }
    }

    fn assert_member(&self, x: FieldElement) -> u32 {
        assert!(self.contains(x), "operand belongs to a different field");
        x.index
    }

    // Index-level arithmetic used by the hot loops of the sum and basis
    // constructions. Callers guarantee the indices are below q.

    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        if p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b, mut out, mut scale) = (a, b, 0, 1);
        for _ in 0..self.m {
            out += ((a % p + b % p) % p) * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        let p = self.p;
        if p == 2 {
            return a;
        }
        let (mut a, mut out, mut scale) = (a, 0, 1);
        for _ in 0..self.m {
            out += ((p - a % p) % p) * scale;
            scale *= p;
            a /= p;
        }
        out
    }

    pub(crate) fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        if self.primitive {
            let t =
                (self.log[a as usize] as u64 + self.log[b as usize] as u64) % (self.q - 1) as u64;
            return self.exp[t as usize];
        }
        self.mul_by_reduction(a, b)
    }

    fn mul_by_reduction(&self, a: u32, b: u32) -> u32 {
        let (p, m) = (self.p as u64, self.m as usize);
        let da = decode(a, self.p, self.m);
        let db = decode(b, self.p, self.m);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &g) in self.modulus[..m].iter().enumerate() {
                let t = prod[k - m + i] + (p - c) * g as u64 % p;
                prod[k - m + i] = t % p;
            }
            prod[k] = 0;
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&c| c as u32).collect();
        encode(&digits, self.p)
    }

    pub(crate) fn pow_idx(&self, a: u32, mut e: u64) -> u32 {
        if self.primitive && a != 0 {
            let t = (self.log[a as usize] as u128 * e as u128) % (self.q - 1) as u128;
            return self.exp[t as usize];
        }
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn inv_idx(&self, a: u32) -> Option<u32> {
        match a {
            0 => None,
            _ if self.primitive => {
                let t = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
                Some(self.exp[t as usize])
            }
            _ => Some(self.pow_idx(a, (self.q - 2) as u64)),
        }
    }

    /// Field addition. Panics if an operand belongs to another field; see
    /// [`FieldSpec::field_op`] for the checked variant.
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.wrap(self.add_idx(self.assert_member(a), self.assert_member(b)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.wrap(self.sub_idx(self.assert_member(a), self.assert_member(b)))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.wrap(self.neg_idx(self.assert_member(a)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.wrap(self.mul_idx(self.assert_member(a), self.assert_member(b)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.inv_idx(self.assert_member(a))
            .map(|i| self.wrap(i))
            .ok_or(Error::ZeroInverse)
    }

    /// `a^e`; negative exponents go through the inverse.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        let idx = self.assert_member(a);
        let base = if e < 0 {
            self.inv_idx(idx).ok_or(Error::ZeroInverse)?
        } else {
            idx
        };
        Ok(self.wrap(self.pow_idx(base, e.unsigned_abs())))
    }

    /// Checked dispatcher over the field operations.
    pub fn field_op(&self, op: FieldOp, a: FieldElement, b: Operand) -> Result<FieldElement> {
        let a_idx = self.check(a)?;
        let element = |b: Operand| match b {
            Operand::Element(e) => self.check(e),
            _ => Err(Error::InvalidPolynomial(format!(
                "{op:?} needs an element operand"
            ))),
        };
        match op {
            FieldOp::Add => Ok(self.wrap(self.add_idx(a_idx, element(b)?))),
            FieldOp::Sub => Ok(self.wrap(self.sub_idx(a_idx, element(b)?))),
            FieldOp::Mul => Ok(self.wrap(self.mul_idx(a_idx, element(b)?))),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow => match b {
                Operand::Exponent(e) => self.pow(a, e),
                _ => Err(Error::InvalidPolynomial(
                    "pow needs an integer exponent".into(),
                )),
            },
        }
    }

    fn trace_direct(&self, x: u32) -> u32 {
        let mut acc = x;
        let mut term = x;
        for _ in 1..self.m {
            term = self.pow_idx(term, self.p as u64);
            acc = self.add_idx(acc, term);
        }
        debug_assert!(acc < self.p, "trace left the prime subfield");
        acc
    }

    pub(crate) fn trace_idx(&self, x: u32) -> u32 {
        if self.m == 1 {
            return x;
        }
        let p = self.p as u64;
        let (mut x, mut acc) = (x as u64, 0u64);
        for &t in &self.basis_traces {
            acc += (x % p) * t as u64;
            x /= p;
        }
        (acc % p) as u32
    }

    /// Absolute trace `x + x^p + … + x^{p^{m-1}}`, returned as an integer in `0..p`.
    pub fn trace(&self, x: FieldElement) -> u32 {
        self.trace_idx(self.assert_member(x))
    }

    /// `t` in `0..q-1` with `α^t = x`.
    pub fn discrete_log(&self, x: FieldElement) -> Result<u32> {
        let idx = self.check(x)?;
        if idx == 0 {
            return Err(Error::LogOfZero);
        }
        if !self.primitive {
            return Err(Error::NoPrimitiveElement);
        }
        Ok(self.log[idx as usize])
    }

    pub(crate) fn log_idx(&self, x: u32) -> u32 {
        self.log[x as usize]
    }

    pub(crate) fn exp_idx(&self, t: u32) -> u32 {
        self.exp[t as usize]
    }

    /// `x` written as a polynomial in the given symbol, e.g. `1+α+α^2`.
    pub fn format_element(&self, x: FieldElement, symbol: &str) -> String {
        let terms: Vec<String> = self
            .coeffs(x)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let coef = if c == 1 && i > 0 {
                    String::new()
                } else {
                    c.to_string()
                };
                match i {
                    0 => coef,
                    1 => format!("{coef}{symbol}"),
                    _ => format!("{coef}{symbol}^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// Materializes the three-representation table (powers, polynomials, tuples).
    pub fn table(&self) -> Result<FieldTable> {
        FieldTable::build(self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = FqPoly::from_indices(self.modulus.clone());
        write!(f, "GF({}) = F_{}[x]/({})", self.q, self.p, g.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FieldSpec {
        FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn f8_from_x3_x_1() {
        let f = f8();
        let a = f.alpha();
        let a3 = f.pow(a, 3).unwrap();
        assert_eq!(f.coeffs(a3), vec![1, 1, 0]); // 1 + α
        assert_eq!(
            f.discrete_log(f.from_coeffs(&[1, 1, 0]).unwrap()).unwrap(),
            3
        );
        assert_eq!(f.discrete_log(f.one()).unwrap(), 0);
        assert_eq!(
            f.discrete_log(f.from_coeffs(&[1, 0, 1]).unwrap()).unwrap(),
            6
        );
        assert_eq!(f.mul(a, f.pow(a, 6).unwrap()), f.one());
        assert_eq!(f.discrete_log(f.zero()), Err(Error::LogOfZero));
    }

    #[test]
    fn default_modulus_order() {
        assert_eq!(FieldSpec::new(2, 3, None).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(
            FieldSpec::new(2, 4, None).unwrap().modulus(),
            &[1, 1, 0, 0, 1]
        );
        assert_eq!(FieldSpec::new(2, 2, None).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2, None).unwrap().modulus(), &[2, 1, 1]);
    }

    #[test]
    fn f4_worked_example() {
        let f = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        let x1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.add(x, x1), f.one());
        assert_eq!(f.mul(x, x), x1);
        assert_eq!(f.trace(x), 1);
    }

    #[test]
    fn prime_field_is_modular_arithmetic() {
        let f = FieldSpec::new(3, 1, None).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let (ea, eb) = (f.element(a).unwrap(), f.element(b).unwrap());
                assert_eq!(f.add(ea, eb).index(), (a + b) % 3);
                assert_eq!(f.mul(ea, eb).index(), (a * b) % 3);
            }
        }
        assert!(f.is_primitive());
    }

    #[test]
    fn trace_examples() {
        let f = f8();
        assert_eq!(f.trace(f.zero()), 0);
        assert_eq!(f.trace(f.one()), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1, None).unwrap_err(), Error::NonPrimeP(4));
        assert_eq!(
            FieldSpec::new(2, 0, None).unwrap_err(),
            Error::InvalidDegree(0)
        );
        assert!(matches!(
            FieldSpec::new(2, 21, None),
            Err(Error::FieldTooLarge { .. })
        ));
        // x^2 + 1 = (x + 1)^2 over F_2
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::NotIrreducible { p: 2 }
        );
        // x^4 + x^3 + x^2 + x + 1 is irreducible over F_2 but its root has order 5
        assert_eq!(
            FieldSpec::new(2, 4, Some(&[1, 1, 1, 1, 1])).unwrap_err(),
            Error::NotPrimitive {
                order: 5,
                expected: 15
            }
        );
        assert!(matches!(
            FieldSpec::new(2, 3, Some(&[1, 1, 0, 2])),
            Err(Error::InvalidPolynomial(_))
        ));
    }

    #[test]
    fn irreducible_override_disables_logs() {
        let f = FieldSpec::with_irreducible_modulus(2, 4, &[1, 1, 1, 1, 1]).unwrap();
        assert!(!f.is_primitive());
        let x = f.alpha();
        assert_eq!(f.pow(x, 5).unwrap(), f.one());
        assert_eq!(f.discrete_log(x), Err(Error::NoPrimitiveElement));
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        // reduction-based and table-based multiplication agree on a primitive field
        let g = FieldSpec::new(3, 3, None).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                assert_eq!(g.mul_idx(a, b), g.mul_by_reduction(a, b));
            }
        }
    }

    #[test]
    fn mixed_fields_rejected() {
        let f = f8();
        let g = FieldSpec::new(2, 3, Some(&[1, 0, 1, 1])).unwrap();
        let r = f.field_op(FieldOp::Add, f.one(), Operand::Element(g.one()));
        assert_eq!(r, Err(Error::MixedFields));
        assert_eq!(
            f.field_op(FieldOp::Inv, f.zero(), Operand::None),
            Err(Error::ZeroInverse)
        );
        let a = f.alpha();
        assert_eq!(
            f.field_op(FieldOp::Pow, a, Operand::Exponent(-1)).unwrap(),
            f.inv(a).unwrap()
        );
    }

    #[test]
    fn additive_identity() {
        let f = FieldSpec::new(5, 2, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.zero()), a);
            assert_eq!(f.sub(a, a), f.zero());
        }
    }
}
