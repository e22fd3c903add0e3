use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("residue requested for an element of negative valuation")]
    NegativeValuation,
    #[error("initial form of the zero polynomial")]
    ZeroPolynomial,
    #[error("term orders only compare monomials with nonnegative exponents")]
    NegativeExponent,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Gröbner computation exceeded {limit} reduction steps")]
    StepLimitExceeded { limit: u64 },
    #[error("weight lies outside the tropical variety")]
    OutsideTropicalVariety,
    #[error("support candidate does not cut out the support of the initial scheme")]
    SupportMismatch,
    #[error("support candidate could not be verified within the power bound")]
    SupportUnverified,
    #[error("ray direction is zero or interval is empty")]
    DegenerateDirection,
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("generator is not affine-linear: {0}")]
    NonlinearInput(String),
    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),
    #[error("series constant term is not invertible")]
    NonUnitConstantTerm,
    #[error("square root needs constant term 1")]
    BadConstantTerm,
    #[error("substituted series must be a unit for negative exponents")]
    NonUnitSubstitution,
    #[error("truncation order {got} is below the minimum {min}")]
    TruncationTooSmall { got: usize, min: usize },
    #[error("order of vanishing of the zero function")]
    ZeroFunction,
    #[error("boundary point is not rational over Q(t)")]
    IrrationalPoint,
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
