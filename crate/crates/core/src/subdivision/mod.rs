//! Barycentric subdivision, `Ex` and finite iterates `Ex^k`.

mod ex;
mod sd;

pub use ex::{ex, ex_iter, ex_unit, ExComplex, StageReport};
pub use sd::{last_vertex, sd, sd_map, Subdivision};
