use std::fmt;

use crate::algebra::{regular_module, Representation};
use crate::bounds::{proself_certificate, ProselfResult};
use crate::error::Result;
use crate::homology::{pd, vanishing_onset, OnsetResult, OnsetStatus, PdResult};
use crate::Engine;

use super::approx::{coresolution_in_add, CoresolutionFailure, CoresolutionResult};

/// Whether `Ext^i(X, T) = 0` for all `i > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orthogonality {
    CertifiedTrue,
    /// A positive degree with nonzero Ext.
    CertifiedFalse(usize),
    /// Every degree up to the cutoff vanishes, without a certificate beyond.
    WindowOnly,
}

impl Orthogonality {
    pub fn is_certified_true(self) -> bool {
        self == Orthogonality::CertifiedTrue
    }
}

impl fmt::Display for Orthogonality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orthogonality::CertifiedTrue => write!(f, "certified-true"),
            Orthogonality::CertifiedFalse(d) => write!(f, "certified-false(degree {d})"),
            Orthogonality::WindowOnly => write!(f, "window-only"),
        }
    }
}

fn orthogonality(onset: &OnsetResult) -> Orthogonality {
    let first_nonzero = onset.window.iter().enumerate().skip(1).find(|(_, &d)| d != 0).map(|(i, _)| i);
    match (&onset.status, first_nonzero) {
        (OnsetStatus::CertifiedVanishes(0), _) => Orthogonality::CertifiedTrue,
        (_, Some(d)) => Orthogonality::CertifiedFalse(d),
        (OnsetStatus::Undetermined(_), None) => Orthogonality::WindowOnly,
        (status, None) => unreachable!("nonvanishing onset {status} with a zero window"),
    }
}

/// `Ext^i(X, T)` for `i > 0`, decided by the onset of the pair.
pub fn left_orthogonal(
    engine: &Engine,
    x: &Representation,
    t: &Representation,
    cutoff: usize,
) -> Result<Orthogonality> {
    Ok(orthogonality(&vanishing_onset(engine, x, t, cutoff)?))
}

pub fn is_selforthogonal(engine: &Engine, t: &Representation, cutoff: usize) -> Result<Orthogonality> {
    left_orthogonal(engine, t, t, cutoff)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(String),
    Undetermined(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(r) => write!(f, "fails({r})"),
            Verdict::Undetermined(r) => write!(f, "undetermined({r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TiltingReport {
    /// Finite projective dimension.
    pub t1: PdResult,
    /// No self-extensions.
    pub t2: Orthogonality,
    /// A finite coresolution of the regular module in `add T`.
    pub t3: CoresolutionResult,
    pub verdict: Verdict,
}

pub fn is_tilting(engine: &Engine, t: &Representation, cutoff: usize, maxlen: usize) -> Result<TiltingReport> {
    let t1 = pd(engine, t, cutoff)?;
    let t2 = is_selforthogonal(engine, t, cutoff)?;
    let t3 = coresolution_in_add(engine, &regular_module(t.algebra())?, t, maxlen)?;
    let mut fails = Vec::new();
    let mut open = Vec::new();
    match &t1 {
        PdResult::Finite(_) => {}
        PdResult::PeriodicInfinite(_) => fails.push("infinite projective dimension".to_string()),
        PdResult::AtLeast(n) => open.push(format!("projective dimension at least {n}")),
    }
    match t2 {
        Orthogonality::CertifiedTrue => {}
        Orthogonality::CertifiedFalse(d) => fails.push(format!("self-extension in degree {d}")),
        Orthogonality::WindowOnly => open.push("self-orthogonality only checked on a window".to_string()),
    }
    match &t3.failure {
        None => {}
        // Every map from R into add T factors through the approximation.
        Some(f @ CoresolutionFailure::NotInjective { stage: 0 }) => fails.push(format!("coresolution: {f}")),
        Some(f @ CoresolutionFailure::NotInjective { .. }) if t2.is_certified_true() => {
            fails.push(format!("coresolution: {f}"))
        }
        Some(f) => open.push(format!("coresolution: {f}")),
    }
    let t3_ok = t3.success() && t3.verify()?;
    if t3.success() && !t3_ok {
        fails.push("coresolution does not re-verify".to_string());
    }
    let verdict = if !fails.is_empty() {
        Verdict::Fails(fails.join("; "))
    } else if !open.is_empty() {
        Verdict::Undetermined(open.join("; "))
    } else {
        Verdict::Holds
    };
    Ok(TiltingReport { t1, t2, t3, verdict })
}

#[derive(Clone, Debug)]
pub struct WakamatsuStage {
    /// The image `Im f_i`, the cokernel after stage `i`.
    pub image: Representation,
    pub orthogonal: Orthogonality,
}

#[derive(Clone, Debug)]
pub struct WakamatsuReport {
    pub w2: Orthogonality,
    pub chain: CoresolutionResult,
    pub stages: Vec<WakamatsuStage>,
    pub verdict: Verdict,
}

/// Self-orthogonality plus the approximation chain of `R`, whose images
/// must have no extensions into `T`. Stops early when a cokernel lies in
/// `add T`; a chain truncated at `maxlen` is undetermined.
pub fn is_wakamatsu(engine: &Engine, t: &Representation, cutoff: usize, maxlen: usize) -> Result<WakamatsuReport> {
    let w2 = is_selforthogonal(engine, t, cutoff)?;
    let chain = coresolution_in_add(engine, &regular_module(t.algebra())?, t, maxlen)?;
    let mut stages = Vec::with_capacity(chain.images.len());
    for image in &chain.images {
        stages.push(WakamatsuStage { image: image.clone(), orthogonal: left_orthogonal(engine, image, t, cutoff)? });
    }
    let bad_stage = stages.iter().position(|s| matches!(s.orthogonal, Orthogonality::CertifiedFalse(_)));
    let window_only = stages.iter().any(|s| s.orthogonal == Orthogonality::WindowOnly);
    // With T self-orthogonal, any admissible chain has the same images up to
    // summands in add T, so these failures are certified.
    let verdict = match (w2, bad_stage, &chain.failure) {
        (Orthogonality::CertifiedFalse(d), _, _) => Verdict::Fails(format!("self-extension in degree {d}")),
        (_, Some(i), _) => Verdict::Fails(format!("image {} has extensions into T ({})", i + 1, stages[i].orthogonal)),
        (Orthogonality::CertifiedTrue, None, Some(f @ CoresolutionFailure::NotInjective { .. })) => {
            Verdict::Fails(f.to_string())
        }
        (Orthogonality::WindowOnly, _, _) => {
            Verdict::Undetermined("self-orthogonality only checked on a window".into())
        }
        (_, None, Some(f)) => Verdict::Undetermined(format!("chain truncated: {f}")),
        (_, None, None) if window_only => Verdict::Undetermined("some images checked on a window only".into()),
        (_, None, None) => Verdict::Holds,
    };
    Ok(WakamatsuReport { w2, chain, stages, verdict })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EwtcOutcome {
    /// Self-orthogonality and the coresolution certify, and `pd T < ∞`.
    Confirmed,
    NotApplicable(String),
    Undetermined(String),
    /// Both conditions certify with certified infinite `pd T`.
    Counterexample(String),
}

impl fmt::Display for EwtcOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EwtcOutcome::Confirmed => write!(f, "confirmed"),
            EwtcOutcome::NotApplicable(r) => write!(f, "not-applicable({r})"),
            EwtcOutcome::Undetermined(r) => write!(f, "undetermined({r})"),
            EwtcOutcome::Counterexample(r) => write!(f, "COUNTEREXAMPLE({r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EwtcReport {
    pub t2: Orthogonality,
    pub t3: CoresolutionResult,
    pub pd: Option<PdResult>,
    /// The split-stage certificate for `T`, run once both conditions hold.
    pub proself: Option<ProselfResult>,
    pub outcome: EwtcOutcome,
}

/// Checks that self-orthogonality and a finite coresolution of `R` in
/// `add T` force `pd T < ∞` for the given module.
pub fn ewtc_check(engine: &Engine, t: &Representation, cutoff: usize, maxlen: usize) -> Result<EwtcReport> {
    let t2 = is_selforthogonal(engine, t, cutoff)?;
    let t3 = coresolution_in_add(engine, &regular_module(t.algebra())?, t, maxlen)?;
    let mut report = EwtcReport { t2, t3, pd: None, proself: None, outcome: EwtcOutcome::Confirmed };
    match t2 {
        Orthogonality::CertifiedTrue => {}
        Orthogonality::CertifiedFalse(d) => {
            report.outcome = EwtcOutcome::NotApplicable(format!("self-extension in degree {d}"));
            return Ok(report);
        }
        Orthogonality::WindowOnly => {
            report.outcome = EwtcOutcome::Undetermined("self-orthogonality only checked on a window".into());
            return Ok(report);
        }
    }
    if let Some(f) = &report.t3.failure {
        report.outcome = EwtcOutcome::NotApplicable(format!("coresolution: {f}"));
        return Ok(report);
    }
    let d = pd(engine, t, cutoff)?;
    let cert = proself_certificate(engine, t, cutoff)?;
    report.outcome = match (&d, &cert) {
        (_, ProselfResult::Violation(r)) => EwtcOutcome::Counterexample(format!("split-stage violation: {r}")),
        (PdResult::Finite(m), ProselfResult::PdBound(k)) if k != m => {
            EwtcOutcome::Counterexample(format!("split stage {k} differs from pd {m}"))
        }
        (PdResult::Finite(_), _) => EwtcOutcome::Confirmed,
        (PdResult::PeriodicInfinite(c), _) => EwtcOutcome::Counterexample(format!(
            "projective dimension infinite with periodicity ({}, {})",
            c.preperiod, c.period
        )),
        (PdResult::AtLeast(n), _) => EwtcOutcome::Undetermined(format!("projective dimension at least {n}")),
    };
    report.pd = Some(d);
    report.proself = Some(cert);
    Ok(report)
}
