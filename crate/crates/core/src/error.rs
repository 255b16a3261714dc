use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(&'static str, &'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    /// A coefficient was requested at or beyond the truncation order.
    #[error("insufficient precision: exponent {needed} requested but series known only below {known}")]
    InsufficientPrecision { needed: String, known: String },

    #[error("repeated roots in singular polynomial {0}")]
    RepeatedRoots(String),

    #[error("irregular singular point: {0}")]
    IrregularSingularity(String),

    #[error("local exponents are not rational: {0}")]
    NonRationalExponents(String),

    #[error("finite-point exponents not determined structurally: {0}")]
    FiniteExponentUnknown(String),

    #[error("solutions are linearly dependent (zero Wronskian)")]
    DependentSolutions,

    #[error("Wronskian is not constant: {0}")]
    NonConstantWronskian(String),

    #[error("test not applicable: {0}")]
    NotApplicable(String),

    #[error("precision retry cap reached; estimated order needed: {0}")]
    PrecisionExhausted(usize),

    #[error("energy level h = 0 refused: {0}")]
    ZeroEnergy(String),

    #[error("logarithmic basis not supported here")]
    LogarithmicBasis,
}

impl Error {
    pub(crate) fn precision(needed: impl ToString, known: impl ToString) -> Self {
        Error::InsufficientPrecision {
            needed: needed.to_string(),
            known: known.to_string(),
        }
    }
}
