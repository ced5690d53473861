//! Representable functors and the Yoneda bijection.

use thiserror::Error;

use super::category::{FinCategory, ObjId};
use crate::budget::{Budget, BudgetExceeded};
use crate::setcalc::{enumerate_set_nat, Diagram, FinSet, SetError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    /// `h^X = Mor(X, -)`, a functor on `C`.
    Co,
    /// `h_X = Mor(-, X)`, a functor on `C^op`.
    Contra,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YonedaError {
    #[error("unknown object index {0}")]
    UnknownObject(ObjId),
    #[error("functor is not defined on the expected shape")]
    ShapeMismatch,
    #[error("evaluation at the identity is not a bijection: {transformations} transformations, {elements} elements")]
    NotBijective { transformations: usize, elements: usize },
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

impl From<SetError> for YonedaError {
    fn from(e: SetError) -> Self {
        match e {
            SetError::Budget(b) => YonedaError::Budget(b),
            _ => YonedaError::ShapeMismatch,
        }
    }
}

/// The hom functor at `x`. The contravariant one lives on `C^op`, where
/// morphism names are unchanged.
pub fn hom_functor(c: &FinCategory, x: ObjId, variance: Variance) -> Result<Diagram, YonedaError> {
    if x >= c.num_objects() {
        return Err(YonedaError::UnknownObject(x));
    }
    let shape = match variance {
        Variance::Co => c.clone(),
        Variance::Contra => c.opposite(),
    };
    // h_X on C is h^X on C^op
    let hom = |y: ObjId| shape.hom(x, y);
    let sets = shape
        .objects()
        .map(|y| FinSet::new(shape.object_name(y), hom(y).iter().map(|&m| shape.morphism_name(m))).unwrap())
        .collect();
    let maps = shape
        .morphisms()
        .map(|g| {
            let target = hom(shape.dst(g));
            hom(shape.src(g))
                .iter()
                .map(|&u| {
                    let v = shape.comp(g, u);
                    target.iter().position(|&t| t == v).unwrap()
                })
                .collect()
        })
        .collect();
    Ok(Diagram::new_unchecked(shape, sets, maps))
}

/// The bijection `Nat(h^X, F) → F(X)`, `ξ ↦ ξ_X(id_X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YonedaWitness {
    /// Image of each enumerated transformation, in enumeration order.
    pub evaluation: Vec<usize>,
}

/// Enumerates `Nat(h^X, F)` and checks evaluation at `id_X` is bijective.
/// With `Variance::Contra`, `f` must be a functor on `C^op`.
pub fn yoneda_check(
    c: &FinCategory,
    x: ObjId,
    f: &Diagram,
    variance: Variance,
    budget: &mut Budget,
) -> Result<YonedaWitness, YonedaError> {
    let h = hom_functor(c, x, variance)?;
    if f.shape != h.shape {
        return Err(YonedaError::ShapeMismatch);
    }
    let shape = &h.shape;
    let id_pos = shape.hom(x, x).iter().position(|&m| m == shape.identity(x)).unwrap();
    let nats = enumerate_set_nat(&h, f, budget)?;
    let evaluation: Vec<usize> = nats.iter().map(|xi| xi.components[x][id_pos]).collect();
    let mut seen = vec![false; f.set(x).len()];
    for &e in &evaluation {
        seen[e] = true;
    }
    if evaluation.len() != seen.len() || !seen.iter().all(|&s| s) {
        return Err(YonedaError::NotBijective {
            transformations: evaluation.len(),
            elements: seen.len(),
        });
    }
    Ok(YonedaWitness { evaluation })
}
