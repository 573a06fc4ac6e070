use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition at index {index}: {reason}")]
    InvalidPartition { index: usize, reason: String },

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("core {0} is not a staircase")]
    NotStaircase(String),

    #[error("polynomial is not weighted homogeneous of degree {0}")]
    NotHomogeneous(usize),

    #[error("series division needs a unit constant term")]
    SeriesDivision,

    #[error("polynomial uses even variable t{0}")]
    EvenVariable(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
