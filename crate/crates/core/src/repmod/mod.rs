//! Morphisms between representations and the module-theoretic operations
//! built on them: add-membership, isomorphism, decomposition, covers and
//! syzygies.

mod add;
mod cover;
mod decompose;
mod iso;
mod maps;

pub use add::{in_add, AddMembership, AddWitness};
pub use cover::{cosyzygy, projective_cover, radical, socle, syzygy, top, ProjectiveCover};
pub use decompose::{decompose, indecomposables_isomorphic, Decomposition, Indecomposable, SearchOptions, Summand};
pub use iso::{is_isomorphic, IsoResult};
pub(crate) use maps::hom_coords;
pub use maps::{cokernel, column_map, diagonal_map, hom_basis, image, kernel, quotient, row_map, submodule, ModuleMap};
