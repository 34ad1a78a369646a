use graphcore::EmbeddingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant {name} violated: expected {expected}, found {found}")]
    InvariantViolation {
        name: String,
        expected: String,
        found: String,
    },
    #[error("parameter {name} = {value} out of range ({allowed})")]
    ParameterOutOfRange {
        name: &'static str,
        value: usize,
        allowed: &'static str,
    },
    #[error("face with {pendants} degree-one vertices cannot be filled")]
    FaceClassification { pendants: usize },
    #[error("vertex labels missing or incomplete")]
    LabelsMissing,
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

impl ConstructError {
    pub fn violation(name: &str, expected: impl ToString, found: impl ToString) -> Self {
        ConstructError::InvariantViolation {
            name: name.to_string(),
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

/// Returns a violation unless `expected == found`.
pub(crate) fn expect_eq<T: PartialEq + ToString>(
    name: &str,
    expected: T,
    found: T,
) -> Result<(), ConstructError> {
    if expected == found {
        Ok(())
    } else {
        Err(ConstructError::violation(name, expected, found))
    }
}
