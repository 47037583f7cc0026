//! Minimal resolutions, Ext tables, projective and injective dimension,
//! periodicity certificates and vanishing onsets.
//!
//! Claims about all large degrees come only from certificates: a
//! terminated resolution or an isomorphism `Ω^a M ≅ Ω^{a+q} M`. Injective
//! invariants are computed through the duality `D`.

mod dimension;
mod ext;
mod resolution;

pub use dimension::{
    id, pd, periodicity_certificate, vanishing_onset, OnsetEvidence, OnsetResult, OnsetStatus, PdResult,
    PeriodicityCertificate, PeriodicitySearch,
};
pub use ext::{ext_dims_hom_complex, ext_dims_stable_hom, ext_table, ExtTable};
pub use resolution::MinimalResolution;
