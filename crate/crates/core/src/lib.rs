//! Finite category theory and combinatorial simplicial homotopy.
//!
//! Everything here works on explicitly enumerated finite data: categories
//! are stored with a total composition table, set-valued functors with
//! explicit functions, and simplicial sets by their nondegenerate cells
//! and face data. Constructions (limits, Kan extensions, nerves,
//! subdivision, localization, fundamental groups) are computed directly
//! and are meant to be checked against brute-force enumeration.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod budget;
pub mod fincat;
pub mod homotopy;
pub mod io;
pub mod modelcat;
pub mod setcalc;
pub mod simplicial;
pub mod subdivision;

mod error;

pub use budget::{Budget, BudgetExceeded};
pub use error::Error;
pub use fincat::{FinCategory, FinFunctor, MorId, ObjId};
pub use setcalc::{Cone, Diagram, FinFunction, FinSet};
pub use simplicial::{CellRef, SimplicialMap, SimplicialSet};
