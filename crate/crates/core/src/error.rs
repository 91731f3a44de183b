use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime modulus")]
    InvalidPrime(u64),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("target degree {target} is smaller than the polynomial degree {degree}")]
    DegreeTooSmall { target: u32, degree: u32 },
    #[error("too many variables ({0}); at most {max} are supported", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("exponent or degree overflow (limit {0})")]
    DegreeOverflow(u32),
    #[error("input is not homogeneous")]
    NonHomogeneousInput,
    #[error("Hilbert function did not stabilize at the guaranteed bound {bound}: {values:?}")]
    StabilizationViolated { bound: usize, values: Vec<i64> },
    #[error("Hilbert function still growing after {0} degrees; scheme is not zero-dimensional")]
    NotZeroDimensional(usize),
    #[error("quotient is not finite-dimensional over the base field")]
    InfiniteDimensional,
    #[error("form degree {m} is out of range for n = {n}")]
    FormDegreeOutOfRange { m: usize, n: usize },
    #[error("polynomial has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("point has X0-coordinate zero")]
    PointAtInfinity,
    #[error("X0 is a zerodivisor modulo the given ideal; apply a linear change of coordinates first")]
    X0ZeroDivisor,
    #[error("unsupported scheme: {0}")]
    UnsupportedScheme(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("characteristic {char} is too small (need 0 or > {bound})")]
    CharTooSmall { char: u64, bound: u64 },
    #[error("local ring profile unavailable: {0}")]
    ProfileUnavailable(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` does not belong to this ring")]
    WrongRing(String),
    #[error("duplicate point in scheme specification")]
    DuplicatePoint,
    #[error("invalid scheme specification: {0}")]
    InvalidSpec(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidSpec(e.to_string())
    }
}
