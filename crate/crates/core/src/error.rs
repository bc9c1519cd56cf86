use thiserror::Error;

/// Failures of exact coefficient arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("divide by zero")]
    DivideByZero,
    #[error("not whole: {0}")]
    NotWhole(String),
    #[error("not real: {0}")]
    NotReal(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
}

/// Everything that can go wrong while building or forcing a series.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("non-productive definition: coefficient {index} depends on itself")]
    NonProductive { index: usize },
    #[error("divide by zero")]
    DivideByZero,
    #[error("not a square root domain: series must start with 1 or with two zeros")]
    NotASquareRootDomain,
    #[error("non-terminating composition: infinite series composed with a series of nonzero constant term")]
    NonTerminatingComposition,
    #[error("not conversible: series must start 0, c with c nonzero")]
    NotConversible,
    #[error("logarithm needs constant term 1")]
    NotLogDomain,
    #[error("operation needs a finite series")]
    InfiniteInput,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degenerate recurrence: leading coefficient is zero")]
    DegenerateRecurrence,
    #[error("argument out of range: {0}")]
    Domain(String),
    #[error(transparent)]
    Coeff(CoeffError),
}

impl From<CoeffError> for SeqError {
    fn from(e: CoeffError) -> Self {
        match e {
            CoeffError::DivideByZero => SeqError::DivideByZero,
            other => SeqError::Coeff(other),
        }
    }
}

pub type Result<T, E = SeqError> = std::result::Result<T, E>;
