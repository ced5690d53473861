//! Dimension-bounded simplicial sets: standard simplices, horns, nerves,
//! maps, products and horn-filling classification.

mod delta;
mod horns;
mod maps;
mod nerve;
mod product;
mod sset;
mod standard;

use thiserror::Error;

use crate::budget::BudgetExceeded;

pub use delta::{all_monotone, all_surjections, DeltaMap};
pub use horns::{classify, horn_fillers, ClassifyReport, HornStat, HornWitness, Verdict};
pub use maps::{
    characteristic_map, count_maps, enumerate_maps, nondegenerate_refs, simplex_map, simplex_ref, simplex_vertices,
    SimplicialMap,
};
pub use nerve::{nerve, nerve_eg, nerve_map, ClassifyingNerves, Nerve};
pub use product::product_sset;
pub use sset::{Cell, CellId, CellRef, SimplicialSet, SimplicialSetBuilder};
pub use standard::{boundary, from_complex, horn, simplex_cell_name, standard_simplex};

pub(crate) use sset::degenerate as degenerate_ref;

/// `f = mono ∘ epi` with `epi` surjective and `mono` injective.
pub fn delta_factor(f: &DeltaMap) -> (DeltaMap, DeltaMap) {
    f.factor()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("not a monotone map: {0:?}")]
    NotMonotone(Vec<usize>),
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("index {index} out of range for a {dim}-cell")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("degeneracy would reach dimension {dim} above max_dim {max_dim}")]
    DegeneracyAboveMax { dim: usize, max_dim: usize },
    #[error("unknown cell `{0}`")]
    UnknownCell(String),
    #[error("duplicate cell `{0}`")]
    DuplicateCell(String),
    #[error("invalid cell name `{0}`")]
    BadCellName(String),
    #[error("invalid cell reference `{0}`")]
    BadRef(String),
    #[error("cell `{cell}` has dimension {dim} above max_dim {max_dim}")]
    DimensionTooHigh { cell: String, dim: usize, max_dim: usize },
    #[error("cell `{cell}` needs {expected} faces, found {found}")]
    FaceCount {
        cell: String,
        expected: usize,
        found: usize,
    },
    #[error("face {index} of `{cell}` has the wrong dimension")]
    FaceDimension { cell: String, index: usize },
    #[error("cell `{cell}` violates d{i} d{j} = d{} d{i}", j - 1)]
    FaceIdentity { cell: String, i: usize, j: usize },
    #[error("not a simplicial map: {0}")]
    NotSimplicial(String),
    #[error("invalid horn assignment: {0}")]
    InvalidAssignment(String),
    #[error("simplicial sets do not match")]
    DimensionMismatch,
    #[error("not a group")]
    NotAGroup,
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}
