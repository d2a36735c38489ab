use thiserror::Error;

/// Errors raised by constructions and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,

    #[error("{0} is not prime")]
    NonPrimeP(u64),
    #[error("invalid extension degree {0}")]
    InvalidDegree(u32),
    #[error("field of size {p}^{m} exceeds the supported bound 2^20")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("modulus is not irreducible over F_{p}")]
    NotIrreducible { p: u32 },
    #[error("modulus is irreducible but its root has order {order} < {expected}")]
    NotPrimitive { order: u64, expected: u64 },
    #[error("element index {index} is outside a field/ring of size {size}")]
    ElementOutOfRange { index: u64, size: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("discrete logarithm of zero is undefined")]
    LogOfZero,
    #[error("discrete logarithm needs a primitive modulus")]
    NoPrimitiveElement,
    #[error("table of size {0} exceeds the materialization bound 2^16")]
    TableTooLarge(u64),

    #[error("reduced polynomial is not primitive over Z_2")]
    NotPrimitiveBase,
    #[error("lifted polynomial does not divide x^{exponent}-1 over Z_4")]
    LiftVerificationFailed { exponent: u64 },
    #[error("ring degree {0} outside 1..=8")]
    RingDegreeOutOfRange(u32),
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("element has no 2-adic decomposition over the Teichmuller set")]
    DecompositionFailed,
    #[error("generalized trace is not a scalar")]
    TraceNotScalar,

    #[error("multiplicative character evaluated at zero")]
    MultCharAtZero,
    #[error("unit group decomposition failed")]
    GroupDecompositionFailed,
    #[error("operation restricted to m <= {max}, got {m}")]
    UnitGroupTooLarge { m: u32, max: u32 },
    #[error("character evaluated outside its carrier")]
    WrongCarrier,
    #[error("element is not in the Teichmuller set")]
    NotTeichmuller,
    #[error("character of kind {0} is not valid here")]
    WrongCharacterKind(String),

    #[error("construction requires odd characteristic (use the Galois-ring route for p = 2)")]
    EvenCharacteristic,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("state dimension {0} is not a perfect square")]
    NonSquareDimension(usize),
    #[error("dimension must be at least 2, got {0}")]
    InvalidDimension(u64),

    #[error("length {n} is not coprime to the characteristic {p}")]
    UnsupportedLength { n: usize, p: u32 },
    #[error("generator polynomial does not divide x^{n}-1")]
    NotADivisor { n: usize },
    #[error("code with q^k = {q}^{k} exceeds the enumeration bound 2^22")]
    CodeTooLarge { q: u32, k: usize },

    #[error("projective space with q^(delta+1) = {0} exceeds 2^20")]
    SpaceTooLarge(u64),
    #[error("unsupported projective dimension {0}")]
    UnsupportedDelta(usize),
    #[error("exhaustive search over {0} points exceeds the bound of 21")]
    SearchSpaceTooLarge(usize),
    #[error("point set is not an arc")]
    NotAnArc,
    #[error("point {0} is not in the set")]
    PointNotInSet(usize),
    #[error("point index {0} out of range")]
    InvalidPoint(usize),
    #[error("incidence matrix requires a projective plane")]
    NotAPlane,
    #[error("canonical form of a {n}x{n} matrix exceeds the exhaustive bound {max}")]
    MatrixTooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
