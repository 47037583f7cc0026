//! Auslander bounds restricted to finite corpora, global and finitistic
//! corpus statistics, and checkers for the laws these bounds satisfy.
//!
//! Every value here is restricted to the corpus it was computed over and
//! is `Exact` only when every contributing pair was certified.

mod ab;
mod certify;
mod corpus;
mod laws;

pub(crate) use ab::eventually_vanishes;
pub use ab::{
    corpus_bounds, lab, min_t_regular, rab, rab_direct, AbResult, Bound, CorpusBoundReport, MemberBounds, PairOnset,
};
pub(crate) use certify::fresh_name;
pub use certify::{
    proself_certificate, strongly_redundant_from, ultimately_closed_at, verify_mth, Check, CheckStatus, Closure,
    ProselfResult, Redundancy,
};
pub use corpus::Corpus;
pub(crate) use laws::Tally;
pub use laws::{verify_bound_laws, verify_certificates, verify_finitistic_laws, StatementReport, StatementStatus};
