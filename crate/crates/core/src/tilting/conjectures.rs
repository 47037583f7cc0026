use std::sync::Arc;

use crate::algebra::{direct_sum, regular_module, Algebra, Representation};
use crate::bounds::{eventually_vanishes, lab, proself_certificate, Corpus, ProselfResult, StatementReport, Tally};
use crate::bounds::{Bound, Check};
use crate::error::{Error, Result};
use crate::homology::{id, pd, vanishing_onset, PdResult};
use crate::repmod::in_add;
use crate::Engine;

use super::checks::{ewtc_check, is_selforthogonal, is_tilting, is_wakamatsu, EwtcOutcome, Orthogonality, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// Self-orthogonal generators are projective.
    Arc,
    /// `M ⊕ R ∈ M^{≫0}` forces `pd M < ∞`.
    Garc,
    /// `M ∈ M^{≫0}` forces a finite left bound.
    BoundFinite,
}

impl std::fmt::Display for Conjecture {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Conjecture::Arc => "ARC",
            Conjecture::Garc => "GARC",
            Conjecture::BoundFinite => "bound-finiteness",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub conjecture: Conjecture,
    pub member: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ArcEntry {
    pub member: String,
    /// Self-orthogonality of `M ⊕ R`.
    pub generator: Orthogonality,
    pub projective: bool,
    pub split_stage: ProselfResult,
    /// Restricted left bound of `M` over the corpus with `R` adjoined, when
    /// `M ∈ M^{≫0}` is certified.
    pub bound: Option<Bound>,
}

#[derive(Clone, Debug)]
pub struct ArcScan {
    pub entries: Vec<ArcEntry>,
    pub counterexamples: Vec<Counterexample>,
    /// Members for which some variant stayed undetermined.
    pub undetermined: Vec<String>,
}

/// Scans the corpus for instances contradicting the three conjectures.
pub fn arc_scan(engine: &Engine, alg: &Arc<Algebra>, corpus: &Corpus, cutoff: usize) -> Result<ArcScan> {
    if !corpus.algebra().same_as(alg) {
        return Err(Error::AlgebraMismatch);
    }
    let r = regular_module(alg)?;
    let mut widened = corpus.clone();
    widened.push(crate::bounds::fresh_name(corpus, "R"), r.clone())?;
    let mut scan = ArcScan { entries: Vec::new(), counterexamples: Vec::new(), undetermined: Vec::new() };
    for (name, m) in corpus.members() {
        let g = direct_sum(alg, &[m.clone(), r.clone()])?;
        let generator = is_selforthogonal(engine, &g, cutoff)?;
        let projective = in_add(m, &r)?.member;
        let mut open = false;
        match generator {
            Orthogonality::CertifiedTrue if !projective => scan.counterexamples.push(Counterexample {
                conjecture: Conjecture::Arc,
                member: name.clone(),
                detail: "M ⊕ R is self-orthogonal but M is not projective".into(),
            }),
            Orthogonality::WindowOnly => open = true,
            _ => {}
        }
        let split_stage = proself_certificate(engine, m, cutoff)?;
        match &split_stage {
            ProselfResult::Violation(detail) => scan.counterexamples.push(Counterexample {
                conjecture: Conjecture::Garc,
                member: name.clone(),
                detail: detail.clone(),
            }),
            ProselfResult::PdBound(k) => {
                if pd(engine, m, cutoff)?.finite() != Some(*k) {
                    scan.counterexamples.push(Counterexample {
                        conjecture: Conjecture::Garc,
                        member: name.clone(),
                        detail: format!("split stage {k} without matching finite projective dimension"),
                    });
                }
            }
            ProselfResult::Undetermined(_) => open = true,
            ProselfResult::NotApplicable(_) => {}
        }
        let bound = match eventually_vanishes(&vanishing_onset(engine, m, m, cutoff)?) {
            Some(true) => {
                let b = lab(engine, m, &widened, cutoff)?.bound;
                open |= !b.is_exact();
                Some(b)
            }
            Some(false) => None,
            None => {
                open = true;
                None
            }
        };
        if open {
            scan.undetermined.push(name.clone());
        }
        scan.entries.push(ArcEntry { member: name.clone(), generator, projective, split_stage, bound });
    }
    Ok(scan)
}

#[derive(Clone, Debug)]
pub struct GscReport {
    /// Injective dimension of the regular left module.
    pub id_left: PdResult,
    /// Injective dimension of the regular module of the opposite algebra.
    pub id_right: PdResult,
    /// Set when both sides are finite.
    pub equal: Option<bool>,
}

pub fn gsc_report(engine: &Engine, alg: &Arc<Algebra>, cutoff: usize) -> Result<GscReport> {
    let id_left = id(engine, &regular_module(alg)?, cutoff)?;
    let id_right = id(engine, &regular_module(&alg.opposite()?)?, cutoff)?;
    let equal = match (id_left.finite(), id_right.finite()) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok(GscReport { id_left, id_right, equal })
}

/// Tilting, Wakamatsu, conjecture and symmetry statements over a corpus.
/// Candidates are `R`, every member and every `M ⊕ R`.
pub fn verify_tilting_laws(
    engine: &Engine,
    corpus: &Corpus,
    cutoff: usize,
    maxlen: usize,
) -> Result<Vec<StatementReport>> {
    let alg = corpus.algebra().clone();
    let r = regular_module(&alg)?;
    let mut candidates: Vec<(String, Representation)> = vec![("R".into(), r.clone())];
    for (name, m) in corpus.members() {
        candidates.push((name.clone(), m.clone()));
        candidates.push((format!("{name}+R"), direct_sum(&alg, &[m.clone(), r.clone()])?));
    }
    let mut out = Vec::new();

    let mut t = Tally::new("regular-module-is-tilting");
    let rep = is_tilting(engine, &r, cutoff, maxlen)?;
    t.record("R", Check::holds(rep.verdict == Verdict::Holds, rep.verdict.to_string()));
    out.push(t.finish());

    let mut tw = Tally::new("tilting-implies-wakamatsu");
    let mut tc = Tally::new("coresolution-reverifies");
    let mut te = Tally::new("ewtc-instances");
    for (name, m) in &candidates {
        let rep = is_tilting(engine, m, cutoff, maxlen)?;
        if rep.t3.success() {
            tc.record(name, Check::holds(rep.t3.verify()?, format!("length {:?}", rep.t3.length())));
        }
        if rep.verdict == Verdict::Holds {
            let w = is_wakamatsu(engine, m, cutoff, maxlen)?;
            tw.record(name, Check::holds(w.verdict == Verdict::Holds, w.verdict.to_string()));
        }
        let e = ewtc_check(engine, m, cutoff, maxlen)?;
        let check = match &e.outcome {
            EwtcOutcome::Confirmed => Check::pass("confirmed"),
            EwtcOutcome::Counterexample(d) => Check::fail(d.clone()),
            other => Check::not_applicable(other.to_string()),
        };
        te.record(name, check);
    }
    out.push(tw.finish());
    out.push(tc.finish());
    out.push(te.finish());

    let mut t = Tally::new("arc-scan-empty");
    let scan = arc_scan(engine, &alg, corpus, cutoff)?;
    for c in &scan.counterexamples {
        t.record(&c.member, Check::fail(format!("{}: {}", c.conjecture, c.detail)));
    }
    for e in &scan.entries {
        if !scan.counterexamples.iter().any(|c| c.member == e.member) {
            t.expect(&e.member, !scan.undetermined.contains(&e.member), true, "no counterexample");
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("gorenstein-symmetry");
    let g = gsc_report(engine, &alg, cutoff)?;
    let detail = format!("id R = {}, opposite {}", g.id_left, g.id_right);
    let one_sided = matches!(
        (&g.id_left, &g.id_right),
        (PdResult::Finite(_), PdResult::PeriodicInfinite(_)) | (PdResult::PeriodicInfinite(_), PdResult::Finite(_))
    );
    match g.equal {
        Some(eq) => t.record("algebra", Check::holds(eq, detail)),
        None if one_sided => t.record("algebra", Check::fail(detail)),
        None => t.record("algebra", Check::not_applicable(detail)),
    }
    out.push(t.finish());
    Ok(out)
}
