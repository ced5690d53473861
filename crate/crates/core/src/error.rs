use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::budget::BudgetExceeded;
use crate::fincat::{CategoryError, FunctorError, YonedaError};
use crate::homotopy::HomotopyError;
use crate::io::IoError;
use crate::modelcat::ModelError;
use crate::setcalc::SetError;
use crate::simplicial::SimplicialError;

/// Any error raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Yoneda(#[from] YonedaError),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

impl Error {
    /// Whether the input failed to parse or match a schema, as opposed to
    /// describing data that violates some law.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Io(_))
    }
}
