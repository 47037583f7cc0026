//! Left `add T`-approximations and coresolutions, tilting and
//! Wakamatsu-tilting checks, and finite instances of the related
//! homological conjectures.

mod approx;
mod checks;
mod conjectures;

pub use approx::{coresolution_in_add, left_add_approximation, Approximation, CoresolutionFailure, CoresolutionResult};
pub use checks::{
    ewtc_check, is_selforthogonal, is_tilting, is_wakamatsu, left_orthogonal, EwtcOutcome, EwtcReport, Orthogonality,
    TiltingReport, Verdict, WakamatsuReport, WakamatsuStage,
};
pub use conjectures::{
    arc_scan, gsc_report, verify_tilting_laws, ArcEntry, ArcScan, Conjecture, Counterexample, GscReport,
};
