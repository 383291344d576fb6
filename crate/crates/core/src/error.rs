use thiserror::Error;

use crate::exactfield::FieldError;
use crate::liecore::LieError;
use crate::linspace::SpaceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("{0} is not a subalgebra")]
    NotSubalgebra(&'static str),
    #[error("{inner} is not contained in {outer}")]
    NotContained {
        inner: &'static str,
        outer: &'static str,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Artifact limitation (budget, infinite field) rather than bad input.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::Unsupported(_)
                | Error::Space(SpaceError::InfiniteField)
                | Error::Space(SpaceError::BudgetExceeded { .. })
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
