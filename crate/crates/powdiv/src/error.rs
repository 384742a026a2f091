use thiserror::Error;

/// Library-wide error type.
///
/// Errors split into two families with different exit codes at the CLI:
/// bad input (including parameter-constraint violations, exit 1) and
/// internal invariant failures (exit 2). An internal failure means a
/// guarantee the algorithm is supposed to establish did not hold, which
/// signals a bug rather than a caller mistake.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parameter constraint violated: {0}")]
    Constraint(ConstraintViolation),

    #[error("basis rows are linearly dependent")]
    DependentRows,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// The specific interval-search hypothesis that failed validation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstraintViolation {
    #[error("exponent too large: 2^r must not exceed N")]
    ExponentExceedsModulus,
    #[error("shift count exceeds lattice dimension: m*r must not exceed d")]
    ShiftCountExceedsDimension,
    #[error("interval center out of range: need H < P and P^r <= N")]
    CenterOutOfRange,
    #[error("half-width H too large for the interval bound")]
    HalfWidthTooLarge,
    #[error("half-width H must be at least 1")]
    HalfWidthTooSmall,
    #[error("range start T below the admissible threshold")]
    RangeStartTooSmall,
    #[error("range endpoints must satisfy T < T' <= floor(N^(1/r))")]
    RangeOutOfOrder,
    #[error("{0}")]
    Other(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Process exit code this error maps to (`1` input, `2` internal).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Constraint(_) => 1,
            Error::DependentRows | Error::Internal(_) => 2,
        }
    }
}
