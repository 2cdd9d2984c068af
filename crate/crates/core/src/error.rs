use thiserror::Error;

/// Errors raised by the algebra kernel and everything built on it.
///
/// Several variants carry mathematical meaning rather than signalling misuse:
/// an [`AlgebraError::Integrality`] raised while inverting ghost components,
/// for instance, is a witness that no integral preimage exists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("DescriptorError: {0}")]
    Descriptor(String),

    #[error("SubstitutionError: variable `{0}` is not bound")]
    Substitution(String),

    #[error("IntegralityError: {term} is not divisible by {divisor}")]
    Integrality { term: String, divisor: String },

    #[error("SymmetryError: {0}")]
    Symmetry(String),

    #[error("PrecisionError: {0}")]
    Precision(String),

    #[error("NotAugmentedError: constant term {0} is nonzero")]
    NotAugmented(String),

    #[error("SeriesFormatError: {0}")]
    SeriesFormat(String),

    #[error("CongruenceError: {0}")]
    Congruence(String),

    #[error("ParseError at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl AlgebraError {
    pub(crate) fn descriptor(msg: impl Into<String>) -> Self {
        AlgebraError::Descriptor(msg.into())
    }

    pub(crate) fn integrality(term: impl ToString, divisor: impl ToString) -> Self {
        AlgebraError::Integrality {
            term: term.to_string(),
            divisor: divisor.to_string(),
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        AlgebraError::Parse {
            offset,
            message: message.into(),
        }
    }

    /// Short name of the error kind, as printed by the command-line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraError::Descriptor(_) => "DescriptorError",
            AlgebraError::Substitution(_) => "SubstitutionError",
            AlgebraError::Integrality { .. } => "IntegralityError",
            AlgebraError::Symmetry(_) => "SymmetryError",
            AlgebraError::Precision(_) => "PrecisionError",
            AlgebraError::NotAugmented(_) => "NotAugmentedError",
            AlgebraError::SeriesFormat(_) => "SeriesFormatError",
            AlgebraError::Congruence(_) => "CongruenceError",
            AlgebraError::Parse { .. } => "SyntaxError",
        }
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
