//! Finite sets, set-valued functors, limits, colimits, ends and Kan
//! extensions.

mod diagram;
mod ends;
mod kan;
mod limits;
mod sets;

use thiserror::Error;

use crate::budget::BudgetExceeded;

pub use diagram::{enumerate_set_functors, enumerate_set_nat, Diagram, SetNat};
pub use ends::{coend, coend_classes, end, end_families, end_iterated, Bifunctor, CoendClasses, InnerFactor};
pub use kan::{check_kan_universal, lan, ran, with_extra_element, KanExtension, KanSide, KanWitness};
pub use limits::{
    coequalizer, colimit, coproduct, cospan_diagram, equalizer, limit, product, pullback, pushout, span_diagram, Cone,
};
pub use sets::{FinFunction, FinSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("duplicate element `{element}` in set `{set}`")]
    DuplicateElement { set: String, element: String },
    #[error("unknown element `{element}` in set `{set}`")]
    UnknownElement { set: String, element: String },
    #[error("function out of `{0}` is not total")]
    NotTotal(String),
    #[error("index {index} out of range for set `{set}`")]
    OutOfRange { set: String, index: usize },
    #[error("functions do not share endpoints")]
    EndpointMismatch,
    #[error("diagram shapes do not match")]
    ShapeMismatch,
    #[error("not a functor: {0}")]
    NotFunctorial(String),
    #[error(
        "universal property fails for test functor #{test}: {extension_side} transformations vs {restricted_side}"
    )]
    NotUniversal {
        test: usize,
        extension_side: usize,
        restricted_side: usize,
    },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}
