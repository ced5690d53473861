//! Weak equivalences, localization, lifting properties and model
//! structures on finite categories.

mod localize;
mod marked;
mod model;

use thiserror::Error;

use crate::budget::BudgetExceeded;
use crate::fincat::FunctorError;

pub use localize::{check_localization_universal, localize, Localization, UniversalityReport};
pub use marked::{saturate_two_of_three, MarkedCategory};
pub use model::{
    check_model, find_retraction, square_lifts, Axiom, AxiomResult, ModelClass, ModelData, ModelReport, SquareWitness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("class has {found} entries, category has {expected} morphisms")]
    ClassSize { expected: usize, found: usize },
    #[error("not a saturated class: {0}")]
    NotSaturated(String),
    #[error("localization has more than {cap} classes")]
    CapExceeded { cap: usize },
    #[error("not universal: {0}")]
    NotUniversal(String),
    #[error(transparent)]
    Functor(#[from] FunctorError),
}

impl From<BudgetExceeded> for ModelError {
    fn from(e: BudgetExceeded) -> Self {
        ModelError::Functor(FunctorError::Budget(e))
    }
}
