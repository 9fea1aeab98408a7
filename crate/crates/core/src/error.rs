use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix rows have different lengths")]
    RaggedMatrix,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("rows do not split into Â and -Â")]
    NotZonotope,
    #[error("rows do not sum to zero (confluent system)")]
    NotNonconfluent,
    #[error("system is not defined by a parallelogram ({pairs} row pairs)")]
    NotParallelogram { pairs: usize },
    #[error("some ĉ_i = -α_i - β_i is not a positive integer")]
    NonPolynomialRegime,
    #[error("the two rows of the pair are linearly dependent")]
    SingularPair,
    #[error("at least two row pairs are required, got {0}")]
    KTooSmall(usize),
    #[error("empty input")]
    EmptyInput,
    #[error("argument must be positive")]
    NonPositive,
    #[error("support is not collinear along the given direction")]
    NonCollinear,
    #[error("direction must be a nonzero integer vector")]
    ZeroDirection,
    #[error("value does not fit the supported integer range")]
    Overflow,
    #[error("certificate failed: {0}")]
    VerificationFailed(String),
}
