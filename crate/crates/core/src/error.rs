use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at the origin")]
    PoleAtOrigin,
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("no rational function with numerator degree <= {num_deg} and denominator degree <= {den_deg} matches the series")]
    ReconstructionFailure { num_deg: usize, den_deg: usize },
    #[error("degenerate operator: {0}")]
    DegenerateOperator(String),
    #[error("tagged series offsets do not cancel")]
    OffsetMismatch,
    #[error("wronskian inputs carry different offsets")]
    MixedOffsets,
    #[error("operator mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("truncation order {order} is below the required minimum {required}")]
    PrecisionInsufficient { order: usize, required: usize },
    #[error("cannot parse rational literal {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
