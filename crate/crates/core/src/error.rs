use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires a non-empty set")]
    EmptySet,
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },
    #[error("shape mismatch")]
    Shape,
    #[error("invalid {kind}: {reason}")]
    Validity { kind: &'static str, reason: String },
}

impl Error {
    pub(crate) fn validity(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Validity {
            kind,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
