use num_bigint::BigUint;
use thiserror::Error;

/// Errors for every operation in this crate.
///
/// `Internal` is special: it signals a violated mathematical contract
/// (a theorem-check failed), i.e. a bug in this crate rather than bad
/// input. The CLI maps it to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("lambda must be an odd prime >= 3, got {0}")]
    InvalidLambda(u64),
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("mismatched lambda: {0} vs {1}")]
    MismatchedLambda(u64, u64),
    #[error("conjugation exponent {k} must be nonzero modulo {lambda}")]
    BadConjugation { k: u64, lambda: u64 },
    #[error("modulus must be >= 2, got {0}")]
    BadModulus(u64),
    #[error("coefficient list is malformed: {0}")]
    BadCoefficientList(String),
    #[error("division by the zero cyclotomic integer")]
    DivisionByZero,
    #[error("operation is undefined for the zero cyclotomic integer")]
    ZeroArgument,
    #[error("no divisor of {q} over lambda={lambda} with the requested identity")]
    NoSuchDivisor { q: u64, lambda: u64 },
    #[error("operation requires a divisor with residue degree f = 1, got f = {0}")]
    ResidueDegreeNotOne(usize),
    #[error("operation requires a general (non-lambda) divisor")]
    LambdaKindNotAllowed,
    #[error("prime factor {0} of the norm exceeds the supported 64-bit range")]
    PrimeTooLarge(BigUint),
    #[error("search budget fields must all be positive")]
    EmptyBudget,
    #[error("concentric circles have no radical axis")]
    ConcentricCircles,
    #[error("tangent configuration excluded: O and O' coincide with A or B")]
    TangentConfiguration,
    #[error("secant abscissa x0 must be nonzero")]
    ZeroAbscissa,
    #[error("semi-axes must be positive")]
    NonpositiveAxis,
    #[error("radius squared must be positive")]
    NonpositiveRadius,
    #[error("internal contract violation: {0}")]
    Internal(String),
}

impl Error {
    /// True when the error indicates a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
