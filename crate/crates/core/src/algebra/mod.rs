//! Bounded quiver algebras and their representations.
//!
//! Conventions used throughout the crate:
//! - paths list arrows in application order;
//! - left modules are representations with `a: M_s -> M_t`;
//! - the product `x * y` applies `y` first;
//! - the regular module is `P(1) ⊕ ... ⊕ P(n)`.

mod build;
mod presentation;
mod quiver;
mod representation;
mod standard;

pub use build::{Algebra, Coords};
pub use presentation::{AlgebraPresentation, Relation, Term};
pub use quiver::{Arrow, Path, Quiver};
pub use representation::Representation;
pub use standard::{
    direct_sum, dual_module, injective_module, projective_module, projective_sum, regular_module, simple_module,
    zero_module,
};
