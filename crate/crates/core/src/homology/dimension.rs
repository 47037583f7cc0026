use crate::algebra::{dual_module, Representation};
use crate::error::Result;
use crate::repmod::{is_isomorphic, IsoResult, ModuleMap};
use crate::Engine;

use super::ext::ext_table;

/// Certified `Ω^a M ≅ Ω^{a+q} M`.
#[derive(Clone, Debug)]
pub struct PeriodicityCertificate {
    pub preperiod: usize,
    pub period: usize,
    pub witness: ModuleMap,
}

impl PeriodicityCertificate {
    /// The witness is an isomorphism between the stated syzygies.
    pub fn verify(&self, engine: &Engine, m: &Representation) -> Result<bool> {
        let res = engine.resolution(m, self.preperiod + self.period)?;
        let (Some(a), Some(b)) = (res.syzygy(self.preperiod), res.syzygy(self.preperiod + self.period)) else {
            return Ok(false);
        };
        Ok(self.witness.source() == &a
            && self.witness.target() == &b
            && self.witness.intertwines()?
            && self.witness.is_iso())
    }
}

#[derive(Clone, Debug)]
pub struct PeriodicitySearch {
    pub certificate: Option<PeriodicityCertificate>,
    /// Pairs `(a, b)` whose isomorphism test was undetermined.
    pub undetermined: Vec<(usize, usize)>,
    /// Largest syzygy index examined.
    pub window: usize,
}

#[derive(Clone, Debug)]
pub enum PdResult {
    Finite(usize),
    PeriodicInfinite(PeriodicityCertificate),
    /// Undecided; `pd ≥ n`.
    AtLeast(usize),
}

impl PdResult {
    pub fn finite(&self) -> Option<usize> {
        match self {
            PdResult::Finite(m) => Some(*m),
            _ => None,
        }
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, PdResult::AtLeast(_))
    }
}

impl std::fmt::Display for PdResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PdResult::Finite(m) => write!(f, "Finite({m})"),
            PdResult::PeriodicInfinite(c) => write!(f, "PeriodicInfinite({}, {})", c.preperiod, c.period),
            PdResult::AtLeast(n) => write!(f, "AtLeast({n})"),
        }
    }
}

/// Searches `a < b ≤ cutoff` with equal syzygy dimension vectors, in
/// lexicographic `(a, b - a)` order, for a certified isomorphism.
pub fn periodicity_certificate(engine: &Engine, m: &Representation, cutoff: usize) -> Result<PeriodicitySearch> {
    let res = engine.resolution(m, cutoff)?;
    let mut search = PeriodicitySearch { certificate: None, undetermined: Vec::new(), window: cutoff };
    if res.terminated() {
        return Ok(search);
    }
    let syz: Vec<Representation> = (0..=cutoff).map(|k| res.syzygy(k).expect("computed")).collect();
    let opts = engine.search_options();
    let mut rng = engine.rng();
    for a in 0..cutoff {
        for b in a + 1..=cutoff {
            if syz[a].dims() != syz[b].dims() {
                continue;
            }
            match is_isomorphic(&syz[a], &syz[b], &opts, &mut rng)? {
                IsoResult::Iso(witness) => {
                    search.certificate = Some(PeriodicityCertificate { preperiod: a, period: b - a, witness });
                    return Ok(search);
                }
                IsoResult::NotIso(_) => {}
                IsoResult::Undetermined(_) => search.undetermined.push((a, b)),
            }
        }
    }
    Ok(search)
}

/// Projective dimension from termination or periodicity of the minimal
/// resolution, computed to `P_cutoff`.
pub fn pd(engine: &Engine, m: &Representation, cutoff: usize) -> Result<PdResult> {
    if let Some(r) = engine.cached_pd(m, cutoff) {
        return Ok(r);
    }
    let res = engine.resolution(m, cutoff)?;
    let out = match res.pd() {
        Some(d) if d <= cutoff => PdResult::Finite(d),
        _ => match periodicity_certificate(engine, m, cutoff)?.certificate {
            Some(c) => PdResult::PeriodicInfinite(c),
            None => PdResult::AtLeast(cutoff + 1),
        },
    };
    engine.store_pd(m, cutoff, &out);
    Ok(out)
}

/// `id M = pd D(M)` over the opposite algebra.
pub fn id(engine: &Engine, m: &Representation, cutoff: usize) -> Result<PdResult> {
    pd(engine, &dual_module(m)?, cutoff)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OnsetStatus {
    /// `Ext^i = 0` for all `i > t`.
    CertifiedVanishes(usize),
    CertifiedNeverVanishes,
    Undetermined(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OnsetEvidence {
    Terminated { pd: usize },
    Periodic { preperiod: usize, period: usize },
    None { undetermined_pairs: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnsetResult {
    pub status: OnsetStatus,
    pub evidence: OnsetEvidence,
    /// Ext dimensions over the checked window, from degree 0.
    pub window: Vec<usize>,
}

impl OnsetResult {
    pub fn vanishes(&self) -> Option<usize> {
        match self.status {
            OnsetStatus::CertifiedVanishes(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self.status, OnsetStatus::Undetermined(_))
    }
}

impl std::fmt::Display for OnsetStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OnsetStatus::CertifiedVanishes(t) => write!(f, "CertifiedVanishes({t})"),
            OnsetStatus::CertifiedNeverVanishes => write!(f, "CertifiedNeverVanishes"),
            OnsetStatus::Undetermined(k) => write!(f, "Undetermined({k})"),
        }
    }
}

fn last_nonzero(dims: &[usize], upto: usize) -> usize {
    (1..=upto.min(dims.len().saturating_sub(1))).rev().find(|&i| dims[i] != 0).unwrap_or(0)
}

/// Least `t` with `Ext^i(M, N) = 0` for all `i > t`, decided only under a
/// termination or periodicity certificate for `M`.
pub fn vanishing_onset(engine: &Engine, m: &Representation, n: &Representation, cutoff: usize) -> Result<OnsetResult> {
    m.same_algebra(n)?;
    if let Some(r) = engine.cached_onset(m, n, cutoff) {
        return Ok(r);
    }
    let out = match pd(engine, m, cutoff)? {
        PdResult::Finite(d) => {
            let window = ext_table(engine, m, n, cutoff.max(d))?.dims;
            OnsetResult {
                status: OnsetStatus::CertifiedVanishes(last_nonzero(&window, d)),
                evidence: OnsetEvidence::Terminated { pd: d },
                window,
            }
        }
        PdResult::PeriodicInfinite(c) => {
            let (a, q) = (c.preperiod, c.period);
            let window = ext_table(engine, m, n, cutoff.max(a + q))?.dims;
            let status = if window[a + 1..=a + q].iter().all(|&d| d == 0) {
                OnsetStatus::CertifiedVanishes(last_nonzero(&window, a))
            } else {
                OnsetStatus::CertifiedNeverVanishes
            };
            OnsetResult { status, evidence: OnsetEvidence::Periodic { preperiod: a, period: q }, window }
        }
        PdResult::AtLeast(_) => {
            let window = ext_table(engine, m, n, cutoff)?.dims;
            let undetermined_pairs = periodicity_certificate(engine, m, cutoff)?.undetermined;
            OnsetResult {
                status: OnsetStatus::Undetermined(cutoff),
                evidence: OnsetEvidence::None { undetermined_pairs },
                window,
            }
        }
    };
    engine.store_onset(m, n, cutoff, &out);
    Ok(out)
}
