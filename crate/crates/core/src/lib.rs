//! Homological invariants of finite-dimensional bounded quiver algebras.
//!
//! The crate computes minimal projective resolutions, Ext tables,
//! projective and injective dimensions, periodicity certificates and
//! Auslander bounds restricted to finite corpora of modules, and checks
//! tilting-theoretic conditions with machine-checkable evidence.
//!
//! Layers, bottom-up:
//!
//! - [`exactla`]: exact linear algebra over 𝔽_p and ℚ;
//! - [`algebra`]: quivers with relations, representations, duality;
//! - [`repmod`]: morphisms, add-membership, decomposition, covers, syzygies;
//! - [`homology`]: resolutions, Ext, pd/id, vanishing onsets;
//! - [`bounds`]: corpus-restricted Auslander bounds and their theorems;
//! - [`tilting`]: approximations, tilting and Wakamatsu checks, conjecture scans.
//!
//! [`fixtures`] holds the built-in algebras and [`io`] the file formats.
//! Every number that claims "for all large degrees" is backed by a
//! certificate; otherwise the result says so explicitly.

pub mod algebra;
pub mod bounds;
pub mod cli;
mod error;
pub mod exactla;
pub mod fixtures;
pub mod homology;
pub mod io;
pub mod repmod;
pub mod tilting;

mod engine;

pub use engine::{Config, Engine};
pub use error::{Error, Result};
