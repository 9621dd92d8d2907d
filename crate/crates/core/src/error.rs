use thiserror::Error;

/// Errors raised by the polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("exponent vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^32")]
    InvalidModulus(u64),
    #[error("variable names must be distinct and non-empty (offending name: {0:?})")]
    InvalidVariableName(String),
    #[error("grading matrix must have {expected} columns and no zero column: {reason}")]
    InvalidGrading { expected: usize, reason: String },
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// Errors raised by ideal-level and algebra-level operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("defining ideal contains a nonzero element of degree {0}; rings must be standard graded")]
    LowDegreeElement(i64),
    #[error("operation requires the standard grading")]
    NonStandardGrading,
    #[error("grading must have {0} rows")]
    GradingRows(usize),
    #[error("grading has negative entries; graded pieces would be infinite")]
    NegativeGrading,
    #[error("ideal is not generated by monomials")]
    NotMonomial,
    #[error("not a regular sequence: {0}")]
    NotRegularSequence(String),
    #[error("truncation bounds too small: {0}")]
    BoundTooSmall(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("elements do not form a basis of the degree-one component")]
    NotABasis,
    #[error("filtration witness refers to unknown ideal {0:?}")]
    UnknownFiltrationIdeal(String),
    #[error("h-polynomial admits no candidate: h2 = {h2} exceeds binomial(h1 + 1, 2) = {max}")]
    NoCandidateCount { h2: i64, max: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
