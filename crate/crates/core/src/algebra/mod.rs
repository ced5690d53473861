//! Monoids, groups and actions in finite sets, orbits, and the
//! Eckmann–Hilton scan.

mod action;
mod eckmann_hilton;
mod monoid;

use thiserror::Error;

use crate::budget::BudgetExceeded;
use crate::setcalc::SetError;

pub use action::{action_to_aut_hom, check_action, orbit, orbits_by_closure, orbits_by_pushout, FinAction};
pub use eckmann_hilton::{eckmann_hilton_scan, interchange, unital_operations, InterchangeCounterexample, SizeReport};
pub use monoid::{check_group, check_monoid, FinMonoid};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a total table on the carrier")]
    NotTotal(String),
    #[error("({a}*{b})*{c} ≠ {a}*({b}*{c})")]
    NotAssociative { a: String, b: String, c: String },
    #[error("no two-sided unit")]
    NoUnit,
    #[error("`{0}` has no inverse")]
    NotAGroup(String),
    #[error("unit does not fix `{0}`")]
    UnitAxiomFailed(String),
    #[error("({x}*{x2})·{y} ≠ {x}·({x2}·{y})")]
    AssocAxiomFailed { x: String, x2: String, y: String },
    #[error("orbits by pushout and by closure differ")]
    OrbitMismatch,
    #[error("carrier size {0} is above the limit of 4")]
    TooLarge(usize),
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}
