use thiserror::Error;

/// Contract violations raised by constructors and algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("field size {p}^{e} is outside the supported range (q <= 65536)")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("no built-in Conway polynomial for GF({p}^{e})")]
    NoConwayPolynomial { p: u32, e: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("degree {d} is out of range for {family} with m = {m}")]
    DegreeOutOfRange { family: &'static str, m: usize, d: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable x{var} is outside the evaluated block")]
    VariableOutOfRange { var: usize },
    #[error("polynomial degree {degree} exceeds {max}")]
    DegreeTooHigh { degree: usize, max: usize },
    #[error("cannot lift degree {from} to {to}: degrees must be congruent mod q-1 and increasing")]
    IncongruentDegrees { from: usize, to: usize },
    #[error("point not found in list")]
    PointNotFound,
    #[error("element {0} is outside the field")]
    ElementOutOfRange(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration needs {needed} steps, bound is {bound}")]
    EnumerationBound { needed: u128, bound: u128 },
    #[error("vector is not a codeword")]
    NotInCode,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
