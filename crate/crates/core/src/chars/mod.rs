//! Additive and multiplicative characters of finite fields and Galois
//! rings, and the exponential sums built from them.

mod complex;
mod sums;
mod units;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use complex::{compensated_sum, i_pow, unit_root, CompensatedSum};
pub use sums::{
    gamma_expected_magnitude, gamma_sum, gauss_sum_field, gauss_sum_ring, weil_bound, weil_sum,
    weil_sweep, WeilSample, WeilSweep,
};
pub use units::{unit_group_characters, UnitGroupStructure, MAX_UNIT_GROUP_DEGREE};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::gring::{RingElement, RingSpec};

pub type ComplexValue = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharacterKind {
    /// `ω_p^{tr(c x)}`
    AdditiveField,
    /// `i^{gtrace(c y)}`
    AdditiveRing,
    /// `exp(2πi·j·dlog(x)/(q-1))`
    MultiplicativeField,
    /// `exp(2πi·k·n/q)` on the canonical integer label `n`
    IndexPhase,
    /// Character of the unit group of a Galois ring.
    RingUnit,
}

impl fmt::Display for CharacterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::AdditiveField => "additive_field",
            Self::AdditiveRing => "additive_ring",
            Self::MultiplicativeField => "multiplicative_field",
            Self::IndexPhase => "index_phase",
            Self::RingUnit => "ring_unit",
        };
        f.write_str(name)
    }
}

/// How the trivial unit-group character treats non-units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrivialConvention {
    /// `ψ₀ = 1` on the whole ring.
    AllOnes,
    /// `ψ₀ = 1` on units and 0 elsewhere.
    #[default]
    UnitSupported,
}

#[derive(Debug, Clone, Copy)]
pub enum Carrier<'a> {
    Field(&'a FieldSpec),
    Ring(&'a RingSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CarrierElement {
    Field(FieldElement),
    Ring(RingElement),
}

impl From<FieldElement> for CarrierElement {
    fn from(x: FieldElement) -> Self {
        Self::Field(x)
    }
}

impl From<RingElement> for CarrierElement {
    fn from(y: RingElement) -> Self {
        Self::Ring(y)
    }
}

/// A character selected by kind and integer parameter over a field or ring.
///
/// For additive kinds the parameter is the index of the scaling element `c`.
#[derive(Debug, Clone)]
pub struct CharacterSpec<'a> {
    kind: CharacterKind,
    parameter: u64,
    carrier: Carrier<'a>,
    units: Option<Arc<UnitGroupStructure>>,
}

/// Serializable summary of a character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterDescriptor {
    pub kind: CharacterKind,
    pub parameter: u64,
    pub carrier: String,
}

impl<'a> CharacterSpec<'a> {
    pub fn additive_field(field: &'a FieldSpec, c: FieldElement) -> Result<Self> {
        if !field.contains(c) {
            return Err(Error::WrongCarrier);
        }
        Ok(Self::plain(
            CharacterKind::AdditiveField,
            c.index() as u64,
            Carrier::Field(field),
        ))
    }

    /// `ω_p^{tr(x)}`.
    pub fn canonical_additive_field(field: &'a FieldSpec) -> Self {
        Self::plain(CharacterKind::AdditiveField, 1, Carrier::Field(field))
    }

    pub fn additive_ring(ring: &'a RingSpec, c: RingElement) -> Result<Self> {
        if !ring.contains(c) {
            return Err(Error::WrongCarrier);
        }
        Ok(Self::plain(
            CharacterKind::AdditiveRing,
            c.index() as u64,
            Carrier::Ring(ring),
        ))
    }

    /// `i^{gtrace(y)}`.
    pub fn canonical_additive_ring(ring: &'a RingSpec) -> Self {
        Self::plain(CharacterKind::AdditiveRing, 1, Carrier::Ring(ring))
    }

    /// Needs a primitive modulus; `j` is reduced mod `q-1`.
    pub fn multiplicative_field(field: &'a FieldSpec, j: u64) -> Result<Self> {
        if !field.is_primitive() {
            return Err(Error::NoPrimitiveElement);
        }
        let period = field.q() as u64 - 1;
        Ok(Self::plain(
            CharacterKind::MultiplicativeField,
            j % period,
            Carrier::Field(field),
        ))
    }

    /// Phase `exp(2πi·k·n/q)` on the canonical index `n` of a field element.
    pub fn index_phase_field(field: &'a FieldSpec, k: u64) -> Self {
        Self::plain(
            CharacterKind::IndexPhase,
            k % field.q() as u64,
            Carrier::Field(field),
        )
    }

    /// Phase `exp(2πi·k·n/2^m)` on the Teichmüller position `n`.
    pub fn index_phase_ring(ring: &'a RingSpec, k: u64) -> Self {
        let period = 1u64 << ring.m();
        Self::plain(CharacterKind::IndexPhase, k % period, Carrier::Ring(ring))
    }

    fn plain(kind: CharacterKind, parameter: u64, carrier: Carrier<'a>) -> Self {
        Self {
            kind,
            parameter,
            carrier,
            units: None,
        }
    }

    pub(crate) fn ring_unit(ring: &'a RingSpec, units: Arc<UnitGroupStructure>, j: u64) -> Self {
        Self {
            kind: CharacterKind::RingUnit,
            parameter: j,
            carrier: Carrier::Ring(ring),
            units: Some(units),
        }
    }

    pub fn kind(&self) -> CharacterKind {
        self.kind
    }

    pub fn parameter(&self) -> u64 {
        self.parameter
    }

    pub fn carrier(&self) -> Carrier<'a> {
        self.carrier
    }

    pub fn is_trivial(&self) -> bool {
        self.parameter == 0
    }

    pub fn descriptor(&self) -> CharacterDescriptor {
        let carrier = match self.carrier {
            Carrier::Field(f) => format!("GF({})", f.q()),
            Carrier::Ring(r) => format!("R_{}", r.size()),
        };
        CharacterDescriptor {
            kind: self.kind,
            parameter: self.parameter,
            carrier,
        }
    }

    /// Evaluates with the unit-supported convention for ring-unit characters.
    pub fn evaluate(&self, x: impl Into<CarrierElement>) -> Result<Complex64> {
        self.evaluate_with(x, TrivialConvention::UnitSupported)
    }

    /// Ring-unit characters are 0 on non-units, except the trivial one
    /// under [`TrivialConvention::AllOnes`].
    pub fn evaluate_with(
        &self,
        x: impl Into<CarrierElement>,
        convention: TrivialConvention,
    ) -> Result<Complex64> {
        match (self.carrier, x.into()) {
            (Carrier::Field(field), CarrierElement::Field(x)) if field.contains(x) => {
                self.eval_field(field, x.index())
            }
            (Carrier::Ring(ring), CarrierElement::Ring(y)) if ring.contains(y) => {
                self.eval_ring(ring, y, convention)
            }
            _ => Err(Error::WrongCarrier),
        }
    }

    pub(crate) fn eval_field(&self, field: &FieldSpec, x: u32) -> Result<Complex64> {
        match self.kind {
            CharacterKind::AdditiveField => {
                let t = field.trace_idx(field.mul_idx(self.parameter as u32, x));
                Ok(unit_root(t as i64, field.p() as u64))
            }
            CharacterKind::MultiplicativeField => {
                if x == 0 {
                    return Err(Error::MultCharAtZero);
                }
                let period = field.q() as u64 - 1;
                let exponent = (self.parameter * field.log_idx(x) as u64) % period;
                Ok(unit_root(exponent as i64, period))
            }
            CharacterKind::IndexPhase => {
                let q = field.q() as u64;
                Ok(unit_root(((self.parameter * x as u64) % q) as i64, q))
            }
            CharacterKind::AdditiveRing | CharacterKind::RingUnit => Err(Error::WrongCarrier),
        }
    }

    fn eval_ring(
        &self,
        ring: &RingSpec,
        y: RingElement,
        convention: TrivialConvention,
    ) -> Result<Complex64> {
        match self.kind {
            CharacterKind::AdditiveRing => {
                let c = ring.element(self.parameter as u32)?;
                Ok(i_pow(ring.gtrace(ring.mul(c, y))?))
            }
            CharacterKind::IndexPhase => {
                let n = ring.teichmuller_position(y).ok_or(Error::NotTeichmuller)? as u64;
                let period = 1u64 << ring.m();
                Ok(unit_root(((self.parameter * n) % period) as i64, period))
            }
            CharacterKind::RingUnit => {
                let units = self.units.as_ref().ok_or(Error::WrongCarrier)?;
                match units.exponents(y) {
                    Some(e) => Ok(units.character_value(self.parameter, e)),
                    None if self.is_trivial() && convention == TrivialConvention::AllOnes => {
                        Ok(Complex64::new(1.0, 0.0))
                    }
                    None => Ok(Complex64::new(0.0, 0.0)),
                }
            }
            CharacterKind::AdditiveField | CharacterKind::MultiplicativeField => {
                Err(Error::WrongCarrier)
            }
        }
    }
}

/// Free-function form of [`CharacterSpec::evaluate`].
pub fn evaluate_character(
    spec: &CharacterSpec<'_>,
    x: impl Into<CarrierElement>,
) -> Result<Complex64> {
    spec.evaluate(x)
}
