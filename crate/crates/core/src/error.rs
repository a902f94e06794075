use thiserror::Error;

/// Errors raised by the library. Outcomes that are legitimate answers
/// (not divisible, not triangular, not an automorphism, ...) are values,
/// not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("resultant input has degree zero in t")]
    InvalidResultantInput,
    #[error("constant polynomial where a nonconstant one is required")]
    ConstantInput,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not of triangular Newton form")]
    NotTriangularInput,
    #[error("degenerate linear transformation (zero determinant)")]
    DegenerateLinear,
    #[error("invalid elementary transformation: {0}")]
    InvalidStep(String),
    #[error("search depth {0} exceeds the budget of 3")]
    SearchBudgetExceeded(usize),
    #[error("both coordinates of the parametrization are constant")]
    DegenerateCurve,
    #[error("Gröbner step budget of {0} exhausted")]
    BudgetExhausted(usize),
    #[error("invalid family specification: {0}")]
    InvalidFamilySpec(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("index {index} out of range 1..{bound}")]
    BadIndex { index: usize, bound: usize },
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("expression mixes t with x or y")]
    MixedVariables,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// The variant name, as reported by the command-line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidResultantInput => "InvalidResultantInput",
            Error::ConstantInput => "ConstantInput",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotTriangularInput => "NotTriangularInput",
            Error::DegenerateLinear => "DegenerateLinear",
            Error::InvalidStep(_) => "InvalidStep",
            Error::SearchBudgetExceeded(_) => "SearchBudgetExceeded",
            Error::DegenerateCurve => "DegenerateCurve",
            Error::BudgetExhausted(_) => "BudgetExhausted",
            Error::InvalidFamilySpec(_) => "InvalidFamilySpec",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::BadIndex { .. } => "BadIndex",
            Error::ParseError { .. } => "ParseError",
            Error::MixedVariables => "MixedVariables",
        }
    }
}
