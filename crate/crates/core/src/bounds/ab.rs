use std::fmt;

use crate::algebra::{dual_module, regular_module, Representation};
use crate::error::{Error, Result};
use crate::homology::{id, pd, vanishing_onset, OnsetResult, OnsetStatus, PdResult};
use crate::Engine;

use super::corpus::Corpus;

/// A corpus-restricted value: exact, or a lower bound when some
/// ingredient is undetermined at the cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Exact(usize),
    LowerBound(usize),
}

impl Bound {
    pub fn value(self) -> usize {
        match self {
            Bound::Exact(v) | Bound::LowerBound(v) => v,
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            Bound::Exact(v) => Some(v),
            Bound::LowerBound(_) => None,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Bound::Exact(_))
    }

    /// Supremum of two bounds.
    pub fn join(self, other: Bound) -> Bound {
        let v = self.value().max(other.value());
        if self.is_exact() && other.is_exact() {
            Bound::Exact(v)
        } else {
            Bound::LowerBound(v)
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Exact(v) => write!(f, "Exact({v})"),
            Bound::LowerBound(v) => write!(f, "LowerBound({v})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairOnset {
    /// The corpus member paired with the module under study.
    pub member: String,
    pub onset: OnsetResult,
}

/// An Auslander bound restricted to a corpus, with its per-pair onsets.
#[derive(Clone, Debug)]
pub struct AbResult {
    pub bound: Bound,
    pub pairs: Vec<PairOnset>,
    /// Members whose pair is undetermined at the cutoff.
    pub undetermined: Vec<String>,
    pub cutoff: usize,
}

fn aggregate(pairs: Vec<PairOnset>, cutoff: usize) -> AbResult {
    let value = pairs.iter().filter_map(|p| p.onset.vanishes()).max().unwrap_or(0);
    let undetermined: Vec<String> =
        pairs.iter().filter(|p| !p.onset.is_certified()).map(|p| p.member.clone()).collect();
    let bound = if undetermined.is_empty() { Bound::Exact(value) } else { Bound::LowerBound(value) };
    AbResult { bound, pairs, undetermined, cutoff }
}

fn check_algebra(m: &Representation, corpus: &Corpus) -> Result<()> {
    if m.algebra().same_as(corpus.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Left bound: the largest certified onset of `Ext^i(M, N)`, `N` in the
/// corpus; pairs that never vanish lie outside `M^{≫0}` and are ignored.
pub fn lab(engine: &Engine, m: &Representation, corpus: &Corpus, cutoff: usize) -> Result<AbResult> {
    check_algebra(m, corpus)?;
    let mut pairs = Vec::with_capacity(corpus.len());
    for (name, n) in corpus.members() {
        pairs.push(PairOnset { member: name.clone(), onset: vanishing_onset(engine, m, n, cutoff)? });
    }
    Ok(aggregate(pairs, cutoff))
}

/// Right bound, computed as the left bound of `D(M)` over the dual corpus.
pub fn rab(engine: &Engine, m: &Representation, corpus: &Corpus, cutoff: usize) -> Result<AbResult> {
    check_algebra(m, corpus)?;
    lab(engine, &dual_module(m)?, &corpus.dual()?, cutoff)
}

/// Right bound from the onsets of `Ext^i(N, M)` directly, deciding each
/// pair by the resolution of `N`.
pub fn rab_direct(engine: &Engine, m: &Representation, corpus: &Corpus, cutoff: usize) -> Result<AbResult> {
    check_algebra(m, corpus)?;
    let mut pairs = Vec::with_capacity(corpus.len());
    for (name, n) in corpus.members() {
        pairs.push(PairOnset { member: name.clone(), onset: vanishing_onset(engine, n, m, cutoff)? });
    }
    Ok(aggregate(pairs, cutoff))
}

/// Onset of `Ext^i(M, R)` for the regular module `R`.
pub fn min_t_regular(engine: &Engine, m: &Representation, cutoff: usize) -> Result<OnsetResult> {
    vanishing_onset(engine, m, &regular_module(m.algebra())?, cutoff)
}

#[derive(Clone, Debug)]
pub struct MemberBounds {
    pub name: String,
    pub lab: AbResult,
    pub rab: AbResult,
    pub pd: PdResult,
    pub id: PdResult,
}

/// Global and finitistic statistics of a corpus, all restricted to it.
#[derive(Clone, Debug)]
pub struct CorpusBoundReport {
    pub glab: Bound,
    pub grab: Bound,
    /// The global bound of the corpus, `glAb` restricted to the corpus.
    pub gab: Bound,
    pub fpd: Bound,
    pub fid: Bound,
    pub flab: Bound,
    pub frab: Bound,
    pub members: Vec<MemberBounds>,
    pub cutoff: usize,
}

fn finitistic<'a>(values: impl Iterator<Item = &'a PdResult>) -> Bound {
    values.fold(Bound::Exact(0), |acc, r| match r {
        PdResult::Finite(d) => acc.join(Bound::Exact(*d)),
        PdResult::PeriodicInfinite(_) => acc,
        PdResult::AtLeast(_) => acc.join(Bound::LowerBound(0)),
    })
}

fn finitistic_ab<'a>(values: impl Iterator<Item = &'a AbResult>) -> Bound {
    values.fold(Bound::Exact(0), |acc, r| match r.bound {
        Bound::Exact(v) => acc.join(Bound::Exact(v)),
        Bound::LowerBound(_) => acc.join(Bound::LowerBound(0)),
    })
}

pub fn corpus_bounds(engine: &Engine, corpus: &Corpus, cutoff: usize) -> Result<CorpusBoundReport> {
    let mut members = Vec::with_capacity(corpus.len());
    for (name, m) in corpus.members() {
        members.push(MemberBounds {
            name: name.clone(),
            lab: lab(engine, m, corpus, cutoff)?,
            rab: rab(engine, m, corpus, cutoff)?,
            pd: pd(engine, m, cutoff)?,
            id: id(engine, m, cutoff)?,
        });
    }
    let glab = members.iter().fold(Bound::Exact(0), |acc, b| acc.join(b.lab.bound));
    let grab = members.iter().fold(Bound::Exact(0), |acc, b| acc.join(b.rab.bound));
    Ok(CorpusBoundReport {
        glab,
        grab,
        gab: glab,
        fpd: finitistic(members.iter().map(|b| &b.pd)),
        fid: finitistic(members.iter().map(|b| &b.id)),
        flab: finitistic_ab(members.iter().map(|b| &b.lab)),
        frab: finitistic_ab(members.iter().map(|b| &b.rab)),
        members,
        cutoff,
    })
}

/// Whether the status places `N` in `M^{≫0}`: `Some(true)` certified in,
/// `Some(false)` certified out, `None` undetermined.
pub(crate) fn eventually_vanishes(o: &OnsetResult) -> Option<bool> {
    match o.status {
        OnsetStatus::CertifiedVanishes(_) => Some(true),
        OnsetStatus::CertifiedNeverVanishes => Some(false),
        OnsetStatus::Undetermined(_) => None,
    }
}
