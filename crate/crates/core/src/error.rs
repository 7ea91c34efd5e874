use thiserror::Error;

/// Errors raised by the exact-arithmetic layers and the closed-form evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate recurrence: a^2 + 4b = 0 for a = {a}, b = {b}")]
    Degenerate { a: String, b: String },
    #[error("b = 0 makes the recurrence first-order")]
    FirstOrder,
    #[error("discriminant {0} is zero or a perfect square; use rational arithmetic")]
    SquareDiscriminant(String),
    #[error("elements of Q(sqrt({0})) and Q(sqrt({1})) cannot be combined")]
    DiscriminantMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    ZeroPolynomial,
    #[error("rational function has a pole at x = 0 and no Maclaurin expansion")]
    PoleAtOrigin,
    #[error("coefficient {0} is not rational")]
    NotRational(String),
    #[error("closed form has a vanishing denominator at x = {x}: {term}")]
    DenominatorZero { x: String, term: String },
    #[error("closed form requires U_0 = 0")]
    NonZeroInitial,
    #[error("{what} requires n {expected}, got n = {n}")]
    Parity { what: String, expected: &'static str, n: u64 },
    #[error("parameter outside the stated range: {0}")]
    OutOfRange(String),
    #[error("symbolic mode is limited to n <= {limit}, got n = {n}")]
    SymbolicTooLarge { n: u64, limit: u64 },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
