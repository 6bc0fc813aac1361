use thiserror::Error;

/// Errors produced by root-system and representation computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse simple type {0:?}: expected a family letter A-G followed by a rank")]
    ParseType(String),

    #[error("{family}{rank} is not an admissible simple type")]
    InadmissibleType { family: char, rank: usize },

    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("module of dimension {dim} exceeds the size guard {max}")]
    SizeGuard { dim: String, max: u64 },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    /// Two routes that must agree did not. Always a bug, never bad input.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors caused by user input rather than by a failed cross-check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Inconsistent(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
