use thiserror::Error;

/// Every failure the engine can report. Variants map onto the CLI exit codes
/// and the FFI error codes, so keep the set small and stable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("coefficient not in the subring finite at L=1: {0}")]
    NotLambdaCirc(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("oriented cycle through vertex {0}")]
    OrientedCycle(usize),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("unsupported quiver: {0}")]
    UnsupportedQuiver(String),
    #[error("not polynomial count: {0}")]
    NotPolynomialCount(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("unsupported poset: {0}")]
    UnsupportedPoset(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
