//! Path components, fundamental group presentations, abelian invariants
//! and amalgamated pushouts of presentations.

mod fundamental;
mod presentation;
mod smith;
mod svk;

use thiserror::Error;

pub use fundamental::{pi0, pi1, EdgeOrder, Pi1};
pub use presentation::{
    cyclic_reduce, exponent_vector, free_reduce, inverse_word, tietze_simplify, Letter, Presentation, Word,
};
pub use smith::{abelian_invariants, in_row_lattice, smith_diagonal, AbelianInvariants};
pub use svk::{svk_pushout, GroupHomSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("base vertex `{0}` not found")]
    BaseNotFound(String),
    #[error("need cells up to dimension 2, have max_dim {0}")]
    DimensionTooLow(usize),
    #[error("invalid generator name `{0}`")]
    BadGenerator(String),
    #[error("invalid word: {0}")]
    BadWord(String),
    #[error("relator {0} does not map into the target's relator lattice")]
    RelatorNotPreserved(usize),
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("homomorphisms have different sources")]
    SourceMismatch,
}
