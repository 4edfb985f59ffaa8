use thiserror::Error;

use crate::partition::Cell;

/// Errors produced by the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid strict partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("cell {0} is not in the shape")]
    CellOutOfShape(Cell),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("tableau is not balanced")]
    NotBalanced,

    #[error("shape {0:?} is not a trapezoid")]
    NotTrapezoid(Vec<usize>),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("not a reflection order: {0}")]
    NotReflectionOrder(String),

    #[error("insertion failed: {0}")]
    Insertion(String),

    #[error("{what} of size {size} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("shape {lambda:?} does not fit in Z({d},{r})")]
    NotContained { lambda: Vec<usize>, d: usize, r: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wraps `self` with the name of the pipeline stage that produced it.
    pub fn at(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// True if this error (or the error it wraps) reports a mathematical
    /// validation failure rather than malformed input.
    pub fn is_validation(&self) -> bool {
        match self {
            Error::Stage { source, .. } => source.is_validation(),
            Error::NotStandard
            | Error::NotBalanced
            | Error::NotReduced(_)
            | Error::NotReflectionOrder(_)
            | Error::Insertion(_)
            | Error::NotTrapezoid(_)
            | Error::NotContained { .. } => true,
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
