use thiserror::Error;

/// Errors surfaced by the library and mapped to CLI exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("the zero polynomial has no leading coefficient")]
    ZeroPolynomial,
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("operation requires an element of positive degree")]
    NotPositiveDegree,
    #[error("elements do not commute")]
    NotCommuting,
    #[error("equal-degree centralizer elements with non-proportional leading coefficients")]
    HypothesisViolated,
    #[error("element does not commute with the given center element")]
    NotInCentralizer,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("exponents must be nonnegative integer literals")]
    ExponentError,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Stable short name, printed on stderr by the CLI.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::FieldMismatch => "FieldMismatch",
            Error::NotPrime(_) => "NotPrime",
            Error::BothZero => "BothZero",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::ZeroElement => "ZeroElement",
            Error::NotPositiveDegree => "NotPositiveDegree",
            Error::NotCommuting => "NotCommuting",
            Error::HypothesisViolated => "HypothesisViolated",
            Error::NotInCentralizer => "NotInCentralizer",
            Error::InvalidAlgebra(_) => "InvalidAlgebra",
            Error::SyntaxError { .. } => "SyntaxError",
            Error::ExponentError => "ExponentError",
            Error::InvalidConfig(_) => "InvalidConfig",
        }
    }

    /// True for errors that should make the CLI exit with code 2.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::SyntaxError { .. } | Error::ExponentError)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
