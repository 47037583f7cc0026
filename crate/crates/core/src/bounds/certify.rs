use std::fmt;

use crate::algebra::{direct_sum, regular_module, zero_module, Representation};
use crate::error::{Error, Result};
use crate::homology::{ext_table, vanishing_onset, OnsetStatus};
use crate::repmod::in_add;
use crate::Engine;

use super::ab::{lab, min_t_regular, Bound};
use super::corpus::Corpus;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Hypotheses not certified at the cutoff.
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not-applicable",
        })
    }
}

/// One checked instance with a human-readable justification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    pub fn pass(detail: impl Into<String>) -> Self {
        Check { status: CheckStatus::Pass, detail: detail.into() }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Check { status: CheckStatus::Fail, detail: detail.into() }
    }

    pub fn not_applicable(detail: impl Into<String>) -> Self {
        Check { status: CheckStatus::NotApplicable, detail: detail.into() }
    }

    pub fn holds(ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Check::pass(detail)
        } else {
            Check::fail(detail)
        }
    }
}

/// A name not yet used in the corpus, derived from `base`.
pub(crate) fn fresh_name(corpus: &Corpus, base: &str) -> String {
    let mut name = base.to_string();
    while corpus.get(&name).is_some() {
        name.push('\'');
    }
    name
}

/// Over all of `mod R` the left bound of `M` is the onset of `Ext(M, R)`.
/// With `R` adjoined to the corpus the restricted bound must equal it.
pub fn verify_mth(engine: &Engine, m: &Representation, corpus: &Corpus, cutoff: usize) -> Result<Check> {
    let t = min_t_regular(engine, m, cutoff)?;
    let Some(t) = t.vanishes() else {
        return Ok(Check::not_applicable(format!("onset against the regular module is {}", t.status)));
    };
    let mut widened = corpus.clone();
    widened.push(fresh_name(corpus, "R"), regular_module(m.algebra())?)?;
    match lab(engine, m, &widened, cutoff)?.bound {
        Bound::Exact(l) => Ok(Check::holds(l == t, format!("lab = {l}, onset against R = {t}"))),
        b => Ok(Check::not_applicable(format!("lab is {b}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProselfResult {
    /// `pd M ≤ m`, with `m` the first split stage of the resolution.
    PdBound(usize),
    NotApplicable(String),
    Undetermined(String),
    /// A split stage whose next syzygy is nonzero: an internal error.
    Violation(String),
}

impl fmt::Display for ProselfResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProselfResult::PdBound(m) => write!(f, "PdBound({m})"),
            ProselfResult::NotApplicable(r) => write!(f, "NotApplicable({r})"),
            ProselfResult::Undetermined(r) => write!(f, "Undetermined({r})"),
            ProselfResult::Violation(r) => write!(f, "Violation({r})"),
        }
    }
}

/// When `Ext^{≫0}(M, M ⊕ R) = 0` is certified, finds the least `m` with
/// `Ext^1(Ω^m M, Ω^{m+1} M) = 0`. Then `0 → Ω^{m+1} → P_m → Ω^m → 0`
/// splits, and minimality forces `Ω^{m+1} M = 0`.
pub fn proself_certificate(engine: &Engine, m: &Representation, cutoff: usize) -> Result<ProselfResult> {
    let r = regular_module(m.algebra())?;
    for (label, n) in [("M", m), ("R", &r)] {
        match vanishing_onset(engine, m, n, cutoff)?.status {
            OnsetStatus::CertifiedVanishes(_) => {}
            OnsetStatus::CertifiedNeverVanishes => {
                return Ok(ProselfResult::NotApplicable(format!(
                    "Ext^i(M, {label}) is nonzero in infinitely many degrees"
                )))
            }
            OnsetStatus::Undetermined(k) => {
                return Ok(ProselfResult::Undetermined(format!(
                    "vanishing of Ext^i(M, {label}) undecided at cutoff {k}"
                )))
            }
        }
    }
    let res = engine.resolution(m, cutoff + 1)?;
    let zero = zero_module(m.algebra());
    for k in 0..=cutoff {
        let om = res.syzygy(k).unwrap_or_else(|| zero.clone());
        let next = res.syzygy(k + 1).unwrap_or_else(|| zero.clone());
        if ext_table(engine, &om, &next, 1)?.dims[1] == 0 {
            return Ok(if next.is_zero() {
                ProselfResult::PdBound(k)
            } else {
                ProselfResult::Violation(format!("stage {k} splits but the next syzygy is nonzero"))
            });
        }
    }
    Ok(ProselfResult::Undetermined(format!("no split stage up to {cutoff}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Closure {
    pub m: usize,
    /// `Ω^m M = 0`, so the membership is trivial.
    pub terminated: bool,
}

fn syzygies(engine: &Engine, m: &Representation, upto: usize) -> Result<Vec<Representation>> {
    let res = engine.resolution(m, upto)?;
    let zero = zero_module(m.algebra());
    Ok((0..=upto).map(|k| res.syzygy(k).unwrap_or_else(|| zero.clone())).collect())
}

fn require_positive(cutoff: usize) -> Result<()> {
    if cutoff == 0 {
        Err(Error::Argument("cutoff must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Least `m ≤ K` with `Ω^m M ∈ add(⊕_{j<m} Ω^j M)`.
pub fn ultimately_closed_at(engine: &Engine, m: &Representation, cutoff: usize) -> Result<Option<Closure>> {
    require_positive(cutoff)?;
    let syz = syzygies(engine, m, cutoff)?;
    if syz[0].is_zero() {
        return Ok(Some(Closure { m: 0, terminated: true }));
    }
    for k in 1..=cutoff {
        if syz[k].is_zero() {
            return Ok(Some(Closure { m: k, terminated: true }));
        }
        let earlier = direct_sum(m.algebra(), &syz[..k])?;
        if in_add(&syz[k], &earlier)?.member {
            return Ok(Some(Closure { m: k, terminated: false }));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redundancy {
    pub m: usize,
    /// `lab ≤ m` against the given corpus, when its bound is exact.
    pub lab_check: Option<Check>,
}

/// Least `m ≤ K - 1` with `Ω^m M ≠ 0` in `add(⊕_{m<j≤K} Ω^j M)`. With a
/// corpus, also checks `lab ≤ m` and notes when it is strict.
pub fn strongly_redundant_from(
    engine: &Engine,
    m: &Representation,
    cutoff: usize,
    corpus: Option<&Corpus>,
) -> Result<Option<Redundancy>> {
    require_positive(cutoff)?;
    let syz = syzygies(engine, m, cutoff)?;
    for k in 0..cutoff {
        if syz[k].is_zero() {
            break;
        }
        let later = direct_sum(m.algebra(), &syz[k + 1..])?;
        if !in_add(&syz[k], &later)?.member {
            continue;
        }
        let lab_check = match corpus {
            None => None,
            Some(c) => Some(match lab(engine, m, c, cutoff)?.bound {
                Bound::Exact(l) if l == k => Check::pass(format!("lab = {l} = {k}")),
                Bound::Exact(l) if l < k => Check::pass(format!("lab = {l} < {k} (strict)")),
                Bound::Exact(l) => Check::fail(format!("lab = {l} > {k}")),
                b => Check::not_applicable(format!("lab is {b}")),
            }),
        };
        return Ok(Some(Redundancy { m: k, lab_check }));
    }
    Ok(None)
}
