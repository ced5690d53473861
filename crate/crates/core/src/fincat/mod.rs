//! Finite categories, functors and natural transformations.

mod category;
mod functor;
mod product;
mod yoneda;

pub use category::{
    examples, identity_name, CategoryBuilder, CategoryError, FinCategory, MorId, Morphism, ObjId, IDENTITY_PREFIX,
};
pub use functor::{enumerate_functors, enumerate_nat_trans, FinFunctor, FunctorError, NatTransformation};
pub use product::{product_category, ProductCategory};
pub use yoneda::{hom_functor, yoneda_check, Variance, YonedaError, YonedaWitness};
