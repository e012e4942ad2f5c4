use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("truncation exceeded: series known below order {order}, requested {requested}")]
    TruncationExceeded { order: usize, requested: usize },
    #[error("invalid Newton pairs: {0}")]
    InvalidPairs(String),
    #[error("generators are not coprime (gcd {0})")]
    NotCoprime(u64),
    #[error("{0} is not in the semigroup")]
    NotInSemigroup(u64),
    #[error("not a branch multiplicity sequence: {0}")]
    NotABranch(String),
    #[error("decomposition failure: Δ(1) = {0}, expected 1")]
    DecompositionFailure(String),
    #[error("genus mismatch: 2δ = {two_delta} but (d-1)(d-2) = {expected}")]
    GenusMismatch { two_delta: u64, expected: u64 },
    #[error("invalid floors: {0}")]
    InvalidFloors(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("non-integral splice data: {0}")]
    NonIntegralSplice(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("too large for the dense route: {0}")]
    TooLarge(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Stable name of the error kind, used in CLI messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InexactDivision => "InexactDivision",
            Error::TruncationExceeded { .. } => "TruncationExceeded",
            Error::InvalidPairs(_) => "InvalidPairs",
            Error::NotCoprime(_) => "NotCoprime",
            Error::NotInSemigroup(_) => "NotInSemigroup",
            Error::NotABranch(_) => "NotABranch",
            Error::DecompositionFailure(_) => "DecompositionFailure",
            Error::GenusMismatch { .. } => "GenusMismatch",
            Error::InvalidFloors(_) => "InvalidFloors",
            Error::InvalidParam(_) => "InvalidParam",
            Error::NonIntegralSplice(_) => "NonIntegralSplice",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::TooLarge(_) => "TooLarge",
            Error::Overflow(_) => "Overflow",
            Error::Parse(_) => "Parse",
            Error::Internal(_) => "Internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mul(a: u64, b: u64, ctx: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn add(a: u64, b: u64, ctx: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}
