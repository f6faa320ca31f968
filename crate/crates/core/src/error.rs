use thiserror::Error;

/// Errors raised by the series engine, the enumerators and the front-end.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("constant term of the divisor is not a nonzero rational constant")]
    NonUnitConstantTerm,

    #[error("inner series of a composition has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("series is not compositionally invertible: {0}")]
    NotInvertible(&'static str),

    #[error("series order {available} is too small, need at least {needed}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("weight series has a nonzero coefficient at x^{degree}")]
    InvalidWeight { degree: usize },

    #[error("coefficient of x^{n} is not integral: {detail}")]
    IntegralityViolation { n: usize, detail: String },

    #[error("coefficient of x^{n} violates a counting constraint: {detail}")]
    CountingViolation { n: usize, detail: String },

    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),

    #[error("invalid contraction move: {0}")]
    InvalidMove(String),

    #[error("amalgamation needs at least 2 letters on each side, got {left} and {right}")]
    SizeTooSmall { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("enumeration budget of {budget} objects exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("malformed relation data: {0}")]
    RelationParse(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
