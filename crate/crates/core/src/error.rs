use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by a series whose constant term is not `±1`.
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(BigInt),

    #[error("coefficient index {index} exceeds series precision {precision}")]
    BeyondPrecision { index: usize, precision: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("malformed eta-quotient spec `{input}`: {reason}")]
    Spec { input: String, reason: String },

    #[error("malformed corpus record on line {line}: {reason}")]
    Record { line: usize, reason: String },

    /// A structural claim that the dissection formulas guarantee did not hold.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
