use thiserror::Error;

/// Broad failure category, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: malformed spec, factors, coefficients or arguments.
    Validation,
    /// A configured resource cap was hit.
    Budget,
    /// An internal identity failed to hold. Always an implementation bug.
    Invariant,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("continued fraction has no coefficients")]
    EmptyExpansion,
    #[error("coefficient a_{index} is zero")]
    ZeroCoefficient { index: usize },
    #[error("coefficient a_{index} is negative")]
    NegativeCoefficient { index: usize },
    #[error("cannot expand a negative rational")]
    NegativeInput,
    #[error("final coefficient is zero and cannot be removed")]
    TrailingZero,
    #[error("bit budget exceeded: {needed} bits requested, cap is {cap}")]
    BitBudgetExceeded { needed: u64, cap: u64 },
    #[error("x_{index} is not divisible by the square of x_{}", index - 1)]
    DivisibilityViolation { index: usize },
    #[error("inexact division while computing term {index}")]
    InexactDivision { index: usize },
    #[error("invalid recurrence spec: {0}")]
    InvalidSpec(String),
    #[error("invalid factor sequence: {0}")]
    InvalidFactors(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("exponent gap c_{} - 2 c_{index} is negative", index + 1)]
    NegativeGap { index: usize },
    #[error("factor class {found} does not match the required class {expected}")]
    ClassMismatch { expected: &'static str, found: String },
    #[error("need {needed} factors but only {available} are available")]
    InsufficientFactors { needed: usize, available: usize },
    #[error("identity `{identity}` failed at n = {n}")]
    IdentityViolation { identity: &'static str, n: usize },
    #[error("d1 + d2 = {sum} gives no dominant root above 2")]
    DegenerateRoot { sum: u32 },
    #[error("{0}")]
    Parse(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BitBudgetExceeded { .. } => ErrorKind::Budget,
            Error::IdentityViolation { .. } => ErrorKind::Invariant,
            _ => ErrorKind::Validation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
