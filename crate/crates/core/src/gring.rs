//! Galois rings `R_{4^m} = Z_4[x]/(h)` with `h` a basic primitive polynomial.
//!
//! Elements are encoded as `Σ c_i 4^i` with `c_i ∈ Z_4` the coefficient of
//! `x^i`. The distinguished root `ξ = [x]` has order `2^m - 1`; the
//! Teichmüller set is `(0, 1, ξ, …, ξ^{2^m-2})` in that order, and every
//! element is uniquely `a + 2b` with `a, b` Teichmüller.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::numtheory::IntPolynomial;

pub const MAX_RING_DEGREE: u32 = 8;

const NOT_FOUND: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingId {
    m: u32,
    h_code: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    index: u32,
    ring: RingId,
}

impl RingElement {
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

/// `y = a + 2b` with `a, b` in the Teichmüller set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoAdicForm {
    pub a: RingElement,
    pub b: RingElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOperand {
    Element(RingElement),
    Exponent(u64),
}

/// Lifts a primitive binary polynomial to the basic primitive polynomial over `Z_4`.
///
/// Writes `hbar = e - d` with `e` holding the even-degree and `d` the
/// odd-degree terms, so that `h(x^2) = ±(e(x)^2 - d(x)^2)`; the sign is the
/// one making `h` monic. The result is checked to reduce to `hbar` mod 2 and
/// to divide `x^{2^m-1} - 1` over `Z_4`.
pub fn lift_basic_primitive(hbar: &[u32]) -> Result<Vec<u32>> {
    let m = hbar
        .len()
        .checked_sub(1)
        .filter(|&m| m >= 1)
        .ok_or(Error::NotPrimitiveBase)?;
    FieldSpec::new(2, m as u32, Some(hbar)).map_err(|_| Error::NotPrimitiveBase)?;

    let parity_part = |parity: usize| {
        IntPolynomial::new(
            hbar.iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == parity { c as i64 } else { 0 })
                .collect(),
        )
    };
    let (even, odd) = (parity_part(0), parity_part(1));
    let square_diff = even.mul(&even).sub(&odd.mul(&odd));
    let c = square_diff.coeffs();
    debug_assert!(c.iter().skip(1).step_by(2).all(|&v| v == 0));
    let sign = if c[2 * m] == 1 { 1 } else { -1 };
    let h: Vec<u32> = (0..=m)
        .map(|i| (sign * c[2 * i]).rem_euclid(4) as u32)
        .collect();

    if h.iter().zip(hbar).any(|(&a, &b)| a % 2 != b) || h[m] != 1 {
        return Err(Error::LiftVerificationFailed {
            exponent: (1 << m) - 1,
        });
    }
    let probe = RingArith::new(m, &h);
    let order = (1u64 << m) - 1;
    if probe.pow(probe.x(), order) != 1 {
        return Err(Error::LiftVerificationFailed { exponent: order });
    }
    Ok(h)
}

/// Raw arithmetic modulo `(h, 4)` on encoded indices.
#[derive(Debug, Clone)]
struct RingArith {
    m: usize,
    h: Vec<u32>,
}

impl RingArith {
    fn new(m: usize, h: &[u32]) -> Self {
        Self { m, h: h.to_vec() }
    }

    fn digits(&self, mut n: u32) -> [u32; 8] {
        let mut d = [0u32; 8];
        for slot in d.iter_mut().take(self.m) {
            *slot = n & 3;
            n >>= 2;
        }
        d
    }

    fn encode(&self, d: &[u32]) -> u32 {
        d[..self.m]
            .iter()
            .rev()
            .fold(0, |acc, &c| (acc << 2) | (c & 3))
    }

    /// `[x]`.
    fn x(&self) -> u32 {
        if self.m == 1 {
            (4 - self.h[0]) % 4
        } else {
            4
        }
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = (0..self.m).map(|i| (da[i] + db[i]) & 3).collect();
        self.encode(&s)
    }

    fn neg(&self, a: u32) -> u32 {
        let d = self.digits(a);
        let s: Vec<u32> = (0..self.m).map(|i| (4 - d[i]) & 3).collect();
        self.encode(&s)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let m = self.m;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = [0u32; 16];
        for i in 0..m {
            if da[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) & 3;
            }
        }
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..m {
                prod[k - m + i] = (prod[k - m + i] + (4 - c) * self.h[i]) & 3;
            }
            prod[k] = 0;
        }
        self.encode(&prod)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// A realized Galois ring `R_{4^m}`.
#[derive(Debug, Clone)]
pub struct RingSpec {
    arith: RingArith,
    hbar: Vec<u32>,
    id: RingId,
    size: u32,
    teichmuller: Vec<u32>,
    /// index -> position in the Teichmüller sequence
    teich_pos: Vec<u32>,
    /// index of `2t` -> index of `t`, for `t` Teichmüller
    halves: Vec<u32>,
}

impl RingSpec {
    /// Builds `R_{4^m}` from the default primitive binary polynomial of degree `m`.
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_RING_DEGREE).contains(&m) {
            return Err(Error::RingDegreeOutOfRange(m));
        }
        let hbar = FieldSpec::new(2, m, None)?.modulus().to_vec();
        Self::from_hbar(&hbar)
    }

    /// Builds the ring over a chosen primitive binary polynomial.
    pub fn from_hbar(hbar: &[u32]) -> Result<Self> {
        let m = hbar.len().saturating_sub(1) as u32;
        if !(1..=MAX_RING_DEGREE).contains(&m) {
            return Err(Error::RingDegreeOutOfRange(m));
        }
        let h = lift_basic_primitive(hbar)?;
        let arith = RingArith::new(m as usize, &h);
        let size = 1u32 << (2 * m);
        let order = (1u32 << m) - 1;

        let xi = arith.x();
        let mut teichmuller = vec![0u32];
        let mut power = 1u32;
        for j in 0..order {
            if j > 0 && power == 1 {
                return Err(Error::LiftVerificationFailed {
                    exponent: order as u64,
                });
            }
            teichmuller.push(power);
            power = arith.mul(power, xi);
        }
        if power != 1 {
            return Err(Error::LiftVerificationFailed {
                exponent: order as u64,
            });
        }

        let mut teich_pos = vec![NOT_FOUND; size as usize];
        let mut halves = vec![NOT_FOUND; size as usize];
        for (pos, &t) in teichmuller.iter().enumerate() {
            teich_pos[t as usize] = pos as u32;
            halves[arith.add(t, t) as usize] = t;
        }
        let h_code = h.iter().rev().fold(0u32, |acc, &c| acc * 4 + c);
        Ok(Self {
            arith,
            hbar: hbar.to_vec(),
            id: RingId { m, h_code },
            size,
            teichmuller,
            teich_pos,
            halves,
        })
    }

    pub fn m(&self) -> u32 {
        self.id.m
    }

    /// `4^m`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Basic primitive modulus over `Z_4`, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.arith.h
    }

    pub fn reduced_modulus(&self) -> &[u32] {
        &self.hbar
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn element(&self, index: u32) -> Result<RingElement> {
        if index >= self.size {
            return Err(Error::ElementOutOfRange {
                index: index as u64,
                size: self.size as u64,
            });
        }
        Ok(self.wrap(index))
    }

    pub(crate) fn wrap(&self, index: u32) -> RingElement {
        debug_assert!(index < self.size);
        RingElement {
            index,
            ring: self.id,
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<RingElement> {
        if coeffs.len() > self.m() as usize || coeffs.iter().any(|&c| c > 3) {
            return Err(Error::InvalidPolynomial(format!(
                "{coeffs:?} is not an element of Z_4[x]/(h)"
            )));
        }
        let mut d = [0u32; 8];
        d[..coeffs.len()].copy_from_slice(coeffs);
        Ok(self.wrap(self.arith.encode(&d)))
    }

    pub fn from_int(&self, n: i64) -> RingElement {
        self.wrap(n.rem_euclid(4) as u32)
    }

    pub fn coeffs(&self, y: RingElement) -> Vec<u32> {
        self.arith.digits(y.index)[..self.m() as usize].to_vec()
    }

    pub fn zero(&self) -> RingElement {
        self.wrap(0)
    }

    pub fn one(&self) -> RingElement {
        self.wrap(1)
    }

    /// The distinguished root `ξ = [x]` of order `2^m - 1`.
    pub fn xi(&self) -> RingElement {
        self.wrap(self.arith.x())
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size).map(|i| self.wrap(i))
    }

    /// Teichmüller set in the fixed order `(0, 1, ξ, …, ξ^{2^m-2})`.
    pub fn teichmuller(&self) -> impl ExactSizeIterator<Item = RingElement> + '_ {
        self.teichmuller.iter().map(|&i| self.wrap(i))
    }

    /// Position in the Teichmüller sequence, if `y` is a Teichmüller element.
    pub fn teichmuller_position(&self, y: RingElement) -> Option<usize> {
        match self.teich_pos[self.assert_member(y) as usize] {
            NOT_FOUND => None,
            p => Some(p as usize),
        }
    }

    pub fn contains(&self, y: RingElement) -> bool {
        y.ring == self.id && y.index < self.size
    }

    /// Units are exactly the elements that are nonzero mod 2.
    pub fn is_unit(&self, y: RingElement) -> bool {
        self.coeffs(y).iter().any(|&c| c & 1 == 1)
    }

    fn assert_member(&self, y: RingElement) -> u32 {
        assert!(self.contains(y), "operand belongs to a different ring");
        y.index
    }

    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        self.arith.mul(a, b)
    }

    pub fn add(&self, a: RingElement, b: RingElement) -> RingElement {
        self.wrap(self.arith.add(self.assert_member(a), self.assert_member(b)))
    }

    pub fn sub(&self, a: RingElement, b: RingElement) -> RingElement {
        let nb = self.arith.neg(self.assert_member(b));
        self.wrap(self.arith.add(self.assert_member(a), nb))
    }

    pub fn neg(&self, a: RingElement) -> RingElement {
        self.wrap(self.arith.neg(self.assert_member(a)))
    }

    pub fn mul(&self, a: RingElement, b: RingElement) -> RingElement {
        self.wrap(self.arith.mul(self.assert_member(a), self.assert_member(b)))
    }

    pub fn pow(&self, a: RingElement, e: u64) -> RingElement {
        self.wrap(self.arith.pow(self.assert_member(a), e))
    }

    /// Checked dispatcher. There is deliberately no inverse: the ring has zero divisors.
    pub fn ring_op(&self, op: RingOp, a: RingElement, b: RingOperand) -> Result<RingElement> {
        if !self.contains(a) {
            return Err(Error::MixedRings);
        }
        let other = |b: RingOperand| match b {
            RingOperand::Element(e) if self.contains(e) => Ok(e),
            RingOperand::Element(_) => Err(Error::MixedRings),
            RingOperand::Exponent(_) => Err(Error::InvalidPolynomial(format!(
                "{op:?} needs an element operand"
            ))),
        };
        match op {
            RingOp::Add => Ok(self.add(a, other(b)?)),
            RingOp::Sub => Ok(self.sub(a, other(b)?)),
            RingOp::Mul => Ok(self.mul(a, other(b)?)),
            RingOp::Pow => match b {
                RingOperand::Exponent(e) => Ok(self.pow(a, e)),
                RingOperand::Element(_) => Err(Error::InvalidPolynomial(
                    "pow needs an integer exponent".into(),
                )),
            },
        }
    }

    /// Decomposes `y = a + 2b` with `a = y^{2^m}` and `b` Teichmüller.
    pub fn two_adic_decompose(&self, y: RingElement) -> Result<TwoAdicForm> {
        let idx = self.assert_member(y);
        let mut a = idx;
        for _ in 0..self.m() {
            a = self.arith.mul(a, a);
        }
        if self.teich_pos[a as usize] == NOT_FOUND {
            return Err(Error::DecompositionFailed);
        }
        let diff = self.arith.add(idx, self.arith.neg(a));
        match self.halves[diff as usize] {
            NOT_FOUND => Err(Error::DecompositionFailed),
            b => Ok(TwoAdicForm {
                a: self.wrap(a),
                b: self.wrap(b),
            }),
        }
    }

    /// Frobenius automorphism `σ(a + 2b) = a² + 2b²`.
    pub fn frobenius(&self, y: RingElement) -> Result<RingElement> {
        let TwoAdicForm { a, b } = self.two_adic_decompose(y)?;
        let a2 = self.arith.mul(a.index, a.index);
        let b2 = self.arith.mul(b.index, b.index);
        Ok(self.wrap(self.arith.add(a2, self.arith.add(b2, b2))))
    }

    /// Generalized trace `Σ_{k<m} σ^k(y)`, an element of `Z_4` returned as `0..4`.
    pub fn gtrace(&self, y: RingElement) -> Result<u32> {
        let mut term = y;
        let mut acc = 0u32;
        for k in 0..self.m() {
            if k > 0 {
                term = self.frobenius(term)?;
            }
            acc = self.arith.add(acc, term.index);
        }
        if acc > 3 {
            return Err(Error::TraceNotScalar);
        }
        Ok(acc)
    }

    /// Polynomial form in `x`, e.g. `3+2x+x^2`.
    pub fn format_element(&self, y: RingElement) -> String {
        let terms: Vec<String> = self
            .coeffs(y)
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
                    1 => format!("{coef}x"),
                    _ => format!("{coef}x^{i}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    /// One row per element: encoding, 2-adic form, trace and character value.
    pub fn table(&self) -> Result<Vec<RingTableRow>> {
        self.elements()
            .map(|y| {
                let TwoAdicForm { a, b } = self.two_adic_decompose(y)?;
                let gtrace = self.gtrace(y)?;
                Ok(RingTableRow {
                    index: y.index,
                    polynomial: self.format_element(y),
                    is_unit: self.is_unit(y),
                    teichmuller_a: self.teichmuller_position(a).unwrap_or(0),
                    teichmuller_b: self.teichmuller_position(b).unwrap_or(0),
                    gtrace,
                    character: ["1", "i", "-1", "-i"][gtrace as usize].to_string(),
                })
            })
            .collect()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = crate::gf::FqPoly::from_indices(self.arith.h.clone());
        write!(f, "R_{{4^{}}} = Z_4[x]/({})", self.m(), h.display())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingTableRow {
    pub index: u32,
    pub polynomial: String,
    pub is_unit: bool,
    /// Teichmüller positions of `a` and `b` in `y = a + 2b`.
    pub teichmuller_a: usize,
    pub teichmuller_b: usize,
    pub gtrace: u32,
    pub character: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts() {
        assert_eq!(lift_basic_primitive(&[1, 1, 1]).unwrap(), vec![1, 1, 1]);
        assert_eq!(
            lift_basic_primitive(&[1, 1, 0, 1]).unwrap(),
            vec![3, 1, 2, 1]
        );
        assert_eq!(
            lift_basic_primitive(&[1, 1, 0, 0, 1]).unwrap(),
            vec![1, 3, 2, 0, 1]
        );
        assert_eq!(
            lift_basic_primitive(&[1, 0, 1]),
            Err(Error::NotPrimitiveBase)
        );
        assert_eq!(
            lift_basic_primitive(&[1, 1, 1, 1, 1]),
            Err(Error::NotPrimitiveBase)
        );
    }

    #[test]
    fn default_rings_match_reference_moduli() {
        assert_eq!(RingSpec::new(2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(RingSpec::new(3).unwrap().modulus(), &[3, 1, 2, 1]);
        assert_eq!(RingSpec::new(4).unwrap().modulus(), &[1, 3, 2, 0, 1]);
        assert_eq!(
            RingSpec::new(0).unwrap_err(),
            Error::RingDegreeOutOfRange(0)
        );
        assert_eq!(
            RingSpec::new(9).unwrap_err(),
            Error::RingDegreeOutOfRange(9)
        );
    }

    #[test]
    fn z4_as_degree_one_ring() {
        let r = RingSpec::new(1).unwrap();
        assert_eq!(r.size(), 4);
        let t: Vec<u32> = r.teichmuller().map(RingElement::index).collect();
        assert_eq!(t, vec![0, 1]);
        let two = r.from_int(2);
        assert_eq!(r.mul(two, two), r.zero());
        let form = r.two_adic_decompose(r.from_int(3)).unwrap();
        assert_eq!((form.a.index(), form.b.index()), (1, 1));
        assert_eq!(r.frobenius(r.from_int(3)).unwrap(), r.from_int(3));
        for y in r.elements() {
            assert_eq!(r.gtrace(y).unwrap(), y.index());
        }
    }

    #[test]
    fn r16_examples() {
        let r = RingSpec::new(2).unwrap();
        let xi = r.xi();
        assert_eq!(r.pow(xi, 3), r.one());
        assert_eq!(r.mul(xi, r.pow(xi, 2)), r.one());
        let form = r.two_adic_decompose(xi).unwrap();
        assert_eq!((form.a, form.b), (xi, r.zero()));
        assert_eq!(r.frobenius(xi).unwrap(), r.pow(xi, 2));
        assert_eq!(r.gtrace(xi).unwrap(), 3);
        assert_eq!(r.gtrace(r.zero()).unwrap(), 0);
        let zero_form = r.two_adic_decompose(r.zero()).unwrap();
        assert_eq!((zero_form.a, zero_form.b), (r.zero(), r.zero()));
    }

    #[test]
    fn r64_order_of_xi() {
        let r = RingSpec::new(3).unwrap();
        assert_eq!(r.teichmuller().len(), 8);
        let xi = r.xi();
        let order = (1..=7).find(|&j| r.pow(xi, j) == r.one()).unwrap();
        assert_eq!(order, 7);
    }

    #[test]
    fn mixed_rings() {
        let r2 = RingSpec::new(2).unwrap();
        let r3 = RingSpec::new(3).unwrap();
        assert_eq!(
            r2.ring_op(RingOp::Add, r2.one(), RingOperand::Element(r3.one())),
            Err(Error::MixedRings)
        );
        let a = r2.from_coeffs(&[3, 2]).unwrap();
        assert_eq!(
            r2.ring_op(RingOp::Add, a, RingOperand::Element(r2.zero()))
                .unwrap(),
            a
        );
        assert_eq!(
            r2.ring_op(RingOp::Pow, r2.xi(), RingOperand::Exponent(3))
                .unwrap(),
            r2.one()
        );
    }

    #[test]
    fn lifted_moduli_reduce_to_hbar() {
        for m in 1..=8 {
            let r = RingSpec::new(m).unwrap();
            let reduced: Vec<u32> = r.modulus().iter().map(|c| c % 2).collect();
            assert_eq!(reduced, r.reduced_modulus());
        }
    }
}
