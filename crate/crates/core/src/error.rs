use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Several variants (`NotDivisible`, `NonPolynomialResult`,
/// `NonConstantPairing`, `MethodMismatch`, ...) never fire on correct input;
/// they report a violated mathematical invariant so callers can surface a
/// counterexample instead of panicking.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} is out of range for type {cartan_type}")]
    RankOutOfRange { cartan_type: String, rank: usize },
    #[error("simple root index {index} is out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("Weyl group of order {order} exceeds the limit {limit}")]
    GroupTooLarge { order: u64, limit: u64 },
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("{poly} is not divisible by {divisor}")]
    NotDivisible { poly: String, divisor: String },
    #[error("division by the zero linear form")]
    DivideByZeroForm,
    #[error("evaluation point is a pole")]
    PoleAtPoint,
    #[error("expected a polynomial, got {0}")]
    NonPolynomialResult(String),
    #[error("localization pairing is not constant: {0}")]
    NonConstantPairing(String),
    #[error("more than one root β with w = yσ_β")]
    AmbiguousBeta,
    #[error("methods disagree: {0}")]
    MethodMismatch(String),
    #[error("element {0} is not the minimal representative of its coset")]
    NonMinimalRepresentative(String),
    #[error("coset representatives give different values: {0}")]
    RepresentativeInconsistency(String),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("time budget of {0} s exceeded")]
    TimeBudgetExceeded(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
