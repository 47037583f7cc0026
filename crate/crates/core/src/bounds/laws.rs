use std::fmt;

use crate::algebra::{direct_sum, dual_module, regular_module, simple_module, Representation};
use crate::error::Result;
use crate::homology::{id, pd, vanishing_onset, OnsetResult, PdResult};
use crate::repmod::{cosyzygy, in_add, projective_cover, syzygy};
use crate::Engine;

use super::ab::{corpus_bounds, eventually_vanishes, lab, rab, rab_direct, Bound};
use super::certify::{proself_certificate, strongly_redundant_from, verify_mth, Check, CheckStatus, ProselfResult};
use super::corpus::Corpus;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatementStatus {
    Pass,
    Fail,
    /// No instance had certified hypotheses.
    Skipped,
    /// Out of reach of finite computation; recorded, not checked.
    Open,
}

impl fmt::Display for StatementStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StatementStatus::Pass => "pass",
            StatementStatus::Fail => "fail",
            StatementStatus::Skipped => "skipped",
            StatementStatus::Open => "open",
        })
    }
}

/// Outcome of one statement over all its instances in a corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementReport {
    pub statement: String,
    pub status: StatementStatus,
    pub checked: usize,
    pub skipped: usize,
    /// Witnesses of failing instances.
    pub failures: Vec<String>,
    pub note: String,
}

impl StatementReport {
    pub fn open(statement: &str, note: &str) -> Self {
        StatementReport {
            statement: statement.into(),
            status: StatementStatus::Open,
            checked: 0,
            skipped: 0,
            failures: Vec::new(),
            note: note.into(),
        }
    }
}

/// Accumulates instance checks for one statement.
pub(crate) struct Tally {
    report: StatementReport,
}

impl Tally {
    pub(crate) fn new(statement: &str) -> Self {
        Tally {
            report: StatementReport {
                statement: statement.into(),
                status: StatementStatus::Skipped,
                checked: 0,
                skipped: 0,
                failures: Vec::new(),
                note: String::new(),
            },
        }
    }

    pub(crate) fn record(&mut self, instance: &str, check: Check) {
        match check.status {
            CheckStatus::Pass => self.report.checked += 1,
            CheckStatus::NotApplicable => self.report.skipped += 1,
            CheckStatus::Fail => {
                self.report.checked += 1;
                self.report.failures.push(format!("{instance}: {}", check.detail));
            }
        }
    }

    /// Records `ok` when `decided`, a skip otherwise.
    pub(crate) fn expect(&mut self, instance: &str, decided: bool, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        let check = if !decided { Check::not_applicable(detail) } else { Check::holds(ok, detail) };
        self.record(instance, check);
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.report.note = note.into();
        self
    }

    pub(crate) fn finish(mut self) -> StatementReport {
        let r = &mut self.report;
        r.status = if !r.failures.is_empty() {
            StatementStatus::Fail
        } else if r.checked > 0 {
            StatementStatus::Pass
        } else {
            StatementStatus::Skipped
        };
        self.report
    }
}

fn both(a: Bound, b: Bound) -> Option<(usize, usize)> {
    Some((a.exact()?, b.exact()?))
}

fn status(o: &OnsetResult) -> Option<bool> {
    eventually_vanishes(o)
}

/// `R ∈ add(⊕ C)`: every indecomposable projective occurs in the corpus.
fn contains_projectives(corpus: &Corpus) -> Result<bool> {
    if corpus.is_empty() {
        return Ok(false);
    }
    let all: Vec<Representation> = corpus.modules().cloned().collect();
    Ok(in_add(&regular_module(corpus.algebra())?, &direct_sum(corpus.algebra(), &all)?)?.member)
}

/// Runs the structural laws of corpus-restricted Auslander bounds over the
/// corpus, its dual over the opposite algebra, and its sub-corpora.
pub fn verify_bound_laws(engine: &Engine, corpus: &Corpus, cutoff: usize) -> Result<Vec<StatementReport>> {
    let alg = corpus.algebra().clone();
    let members = corpus.members();
    let dual = corpus.dual()?;
    let report = corpus_bounds(engine, corpus, cutoff)?;
    let mut out = Vec::new();

    let mut t = Tally::new("left-right-global-equality");
    match both(report.glab, report.grab) {
        Some((l, r)) => t.expect("corpus", true, l == r, format!("glAb = {l}, grAb = {r}")),
        None => t.expect("corpus", false, true, format!("glAb {}, grAb {}", report.glab, report.grab)),
    }
    out.push(t.finish());

    let mut t = Tally::new("restriction-monotonicity");
    for drop in 0..members.len() {
        let keep: Vec<usize> = (0..members.len()).filter(|&i| i != drop).collect();
        let sub = corpus.subcorpus(&keep)?;
        let sub_report = corpus_bounds(engine, &sub, cutoff)?;
        for (i, (name, _)) in members.iter().enumerate() {
            let full = &report.members[i];
            let part = sub_report.members.iter().find(|b| &b.name == name);
            let (lab_sub, rab_sub) = match part {
                Some(b) => (b.lab.bound, b.rab.bound),
                None => {
                    (lab(engine, &members[i].1, &sub, cutoff)?.bound, rab(engine, &members[i].1, &sub, cutoff)?.bound)
                }
            };
            let inst = format!("{name} without {}", members[drop].0);
            if let Some((s, f)) = both(lab_sub, full.lab.bound) {
                t.expect(&inst, true, s <= f, format!("lab {s} over sub-corpus, {f} over corpus"));
            }
            if let Some((s, f)) = both(rab_sub, full.rab.bound) {
                t.expect(&inst, true, s <= f, format!("rab {s} over sub-corpus, {f} over corpus"));
            }
        }
        let inst = format!("global without {}", members[drop].0);
        match both(sub_report.gab, report.gab) {
            Some((s, f)) => t.expect(&inst, true, s <= f, format!("gAb {s} over sub-corpus, {f} over corpus")),
            None => t.expect(&inst, false, true, "global bound not exact"),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("two-out-of-three");
    let mut triples: Vec<(String, [Representation; 3])> = Vec::new();
    for (name, n) in members {
        let cover = projective_cover(n)?;
        triples.push((format!("0->Omega({name})->P->{name}->0"), [syzygy(n, 1)?, cover.projective.clone(), n.clone()]));
    }
    for (a, x) in members {
        for (b, y) in members {
            triples.push((
                format!("0->{a}->{a}+{b}->{b}->0"),
                [x.clone(), direct_sum(&alg, &[x.clone(), y.clone()])?, y.clone()],
            ));
        }
    }
    for (mname, m) in members {
        for (label, terms) in &triples {
            let left: Vec<Option<bool>> = terms
                .iter()
                .map(|x| vanishing_onset(engine, m, x, cutoff).map(|o| status(&o)))
                .collect::<Result<_>>()?;
            let right: Vec<Option<bool>> = terms
                .iter()
                .map(|x| vanishing_onset(engine, x, m, cutoff).map(|o| status(&o)))
                .collect::<Result<_>>()?;
            for (side, s) in [("M^{>>0}", &left), ("^{>>0}M", &right)] {
                let ins = s.iter().filter(|v| **v == Some(true)).count();
                let outs = s.iter().filter(|v| **v == Some(false)).count();
                let inst = format!("M = {mname}, {label}, class {side}");
                t.expect(&inst, ins == 2 && outs == 1 || ins == 3, ins == 3, format!("membership {s:?}"));
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("syzygy-invariance");
    for (mname, m) in members {
        let om = syzygy(m, 1)?;
        for (nname, n) in members {
            let a = status(&vanishing_onset(engine, m, n, cutoff)?);
            let b = status(&vanishing_onset(engine, &om, n, cutoff)?);
            t.expect(&format!("({mname}, {nname})"), a.is_some() && b.is_some(), a == b, format!("{a:?} vs {b:?}"));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("cosyzygy-invariance");
    for (mname, m) in members {
        let cm = cosyzygy(m, 1)?;
        for (nname, n) in members {
            let a = status(&vanishing_onset(engine, n, m, cutoff)?);
            let b = status(&vanishing_onset(engine, n, &cm, cutoff)?);
            t.expect(&format!("({nname}, {mname})"), a.is_some() && b.is_some(), a == b, format!("{a:?} vs {b:?}"));
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("duality-exchange");
    for (i, (mname, m)) in members.iter().enumerate() {
        for (j, (nname, n)) in members.iter().enumerate() {
            let a = vanishing_onset(engine, m, n, cutoff)?;
            let b = vanishing_onset(engine, &dual.members()[j].1, &dual.members()[i].1, cutoff)?;
            let decided = a.is_certified() && b.is_certified();
            t.expect(
                &format!("({mname}, {nname})"),
                decided,
                a.status == b.status,
                format!("{} vs {} over the opposite algebra", a.status, b.status),
            );
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("direct-sum-bound");
    for i in 0..members.len() {
        for j in i..members.len() {
            let s = direct_sum(&alg, &[members[i].1.clone(), members[j].1.clone()])?;
            let inst = format!("{} + {}", members[i].0, members[j].0);
            let ls = lab(engine, &s, corpus, cutoff)?.bound;
            let lmax = report.members[i].lab.bound.join(report.members[j].lab.bound);
            if let Some((a, b)) = both(ls, lmax) {
                t.expect(&inst, true, a <= b, format!("lab {a} vs max {b}"));
            }
            let rs = rab(engine, &s, corpus, cutoff)?.bound;
            let rmax = report.members[i].rab.bound.join(report.members[j].rab.bound);
            if let Some((a, b)) = both(rs, rmax) {
                t.expect(&inst, true, a <= b, format!("rab {a} vs max {b}"));
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("left-right-duality");
    for (i, (name, m)) in members.iter().enumerate() {
        let l = report.members[i].lab.bound;
        let r = rab_direct(engine, &dual_module(m)?, &dual, cutoff)?.bound;
        match both(l, r) {
            Some((a, b)) => t.expect(name, true, a == b, format!("lab {a}, rab of the dual {b}")),
            None => t.expect(name, false, true, format!("lab {l}, rab of the dual {r}")),
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("syzygy-shift");
    let mut c = Tally::new("cosyzygy-shift");
    for (i, (name, m)) in members.iter().enumerate() {
        for k in 0..=3usize {
            let inst = format!("{name}, m = {k}");
            let shifted = lab(engine, &syzygy(m, k)?, corpus, cutoff)?.bound;
            if let Some((a, b)) = both(report.members[i].lab.bound, shifted) {
                t.expect(&inst, true, (a <= k) == (b == 0), format!("lab {a}, lab of syzygy {b}"));
            }
            let coshifted = rab(engine, &cosyzygy(m, k)?, corpus, cutoff)?.bound;
            if let Some((a, b)) = both(report.members[i].rab.bound, coshifted) {
                c.expect(&inst, true, (a <= k) == (b == 0), format!("rab {a}, rab of cosyzygy {b}"));
            }
        }
    }
    out.push(t.finish());
    out.push(c.finish());

    let mut t = Tally::new("global-syzygy-vanishing");
    if let Some(n) = report.gab.exact() {
        let mut witness_below = n == 0;
        for (name, m) in members {
            let l = lab(engine, &syzygy(m, n)?, corpus, cutoff)?.bound;
            t.expect(&format!("{name}, syzygy {n}"), l.is_exact(), l.value() == 0, format!("lab {l}"));
            let r = rab(engine, &cosyzygy(m, n)?, corpus, cutoff)?.bound;
            t.expect(&format!("{name}, cosyzygy {n}"), r.is_exact(), r.value() == 0, format!("rab {r}"));
            if n > 0 {
                let below = lab(engine, &syzygy(m, n - 1)?, corpus, cutoff)?.bound;
                witness_below |= below.exact().is_some_and(|v| v > 0);
            }
        }
        if !members.is_empty() {
            t.expect(
                "minimality",
                true,
                witness_below,
                format!("some syzygy {} has positive lab", n.saturating_sub(1)),
            );
        }
    } else {
        t.expect("corpus", false, true, format!("gAb {}", report.gab));
    }
    out.push(t.finish());

    let mut t = Tally::new("opposite-global-equality");
    let dual_report = corpus_bounds(engine, &dual, cutoff)?;
    match both(report.gab, dual_report.gab) {
        Some((a, b)) => t.expect("corpus", true, a == b, format!("gAb {a}, over the opposite algebra {b}")),
        None => t.expect("corpus", false, true, format!("gAb {}, opposite {}", report.gab, dual_report.gab)),
    }
    out.push(t.finish());

    let mut t = Tally::new("global-bound-equals-id-regular");
    let id_r = id(engine, &regular_module(&alg)?, cutoff)?;
    match (id_r.finite(), report.gab.exact(), corpus.complete) {
        (Some(d), Some(g), true) => t.expect("corpus", true, g == d, format!("gAb {g}, id R {d}")),
        _ => t.expect("corpus", false, true, format!("id R {id_r}, gAb {}, complete {}", report.gab, corpus.complete)),
    }
    out.push(t.note("applies to corpora listing every indecomposable").finish());

    let mut t = Tally::new("lab-below-pd");
    let spans = corpus.complete || contains_projectives(corpus)?;
    for b in &report.members {
        if let (PdResult::Finite(d), Some(l)) = (&b.pd, b.lab.bound.exact()) {
            let ok = if spans { l == *d } else { l <= *d };
            t.expect(&b.name, true, ok, format!("lab {l}, pd {d}, equality expected: {spans}"));
        }
    }
    out.push(t.finish());

    out.push(StatementReport::open(
        "big-global-bound",
        "equality of the global bound over all modules with the finitely generated one is open",
    ));
    out.push(StatementReport::open(
        "big-finitistic-left-bound",
        "equality of the finitistic left bound with its version over all modules is open",
    ));
    Ok(out)
}

/// Inequalities between finitistic dimensions, injective dimensions and the
/// corpus-restricted bounds.
pub fn verify_finitistic_laws(engine: &Engine, corpus: &Corpus, cutoff: usize) -> Result<Vec<StatementReport>> {
    let alg = corpus.algebra().clone();
    let report = corpus_bounds(engine, corpus, cutoff)?;
    let r = regular_module(&alg)?;
    let mut out = Vec::new();

    let mut t = Tally::new("fpd-below-rab-regular");
    let rab_r = rab(engine, &r, corpus, cutoff)?.bound;
    match rab_r.exact() {
        Some(v) => t.expect("corpus", true, report.fpd.value() <= v, format!("fPD {}, rab(R) {v}", report.fpd)),
        None => t.expect("corpus", false, true, format!("rab(R) {rab_r}")),
    }
    out.push(t.finish());

    let mut t = Tally::new("id-below-lab-simples");
    let simples = (0..alg.num_vertices()).map(|i| simple_module(&alg, i)).collect::<Result<Vec<_>>>()?;
    let lab_s = lab(engine, &direct_sum(&alg, &simples)?, corpus, cutoff)?.bound;
    for b in &report.members {
        if let PdResult::Finite(d) = b.id {
            match lab_s.exact() {
                Some(v) => t.expect(&b.name, true, d <= v, format!("id {d}, lab of simples {v}")),
                None => t.expect(&b.name, false, true, format!("lab of simples {lab_s}")),
            }
        }
    }
    out.push(t.finish());

    let mut t = Tally::new("fpd-below-flab");
    let spans = corpus.complete || contains_projectives(corpus)?;
    match (spans, report.flab.exact()) {
        (true, Some(f)) => t.expect("corpus", true, report.fpd.value() <= f, format!("fPD {}, fLAb {f}", report.fpd)),
        _ => t.expect("corpus", false, true, format!("projectives in corpus: {spans}, fLAb {}", report.flab)),
    }
    out.push(t.note("applies when every indecomposable projective is in the corpus").finish());

    let mut t = Tally::new("lab-below-id-regular");
    let id_r = id(engine, &r, cutoff)?;
    for b in &report.members {
        let inst = b.name.as_str();
        match (id_r.finite(), b.lab.bound.exact()) {
            (Some(d), Some(l)) => t.expect(inst, true, l <= d, format!("lab {l}, id R {d}")),
            _ => t.expect(inst, false, true, format!("id R {id_r}, lab {}", b.lab.bound)),
        }
    }
    out.push(t.finish());

    out.push(StatementReport::open(
        "finite-bounds-imply-big-finite",
        "whether finite bounds on finitely generated modules force finite bounds on all modules is open",
    ));
    Ok(out)
}

/// The regular-module onset, split-stage and redundancy certificates,
/// checked against the corpus bounds of every member.
pub fn verify_certificates(engine: &Engine, corpus: &Corpus, cutoff: usize) -> Result<Vec<StatementReport>> {
    let mut out = Vec::new();
    let mut t = Tally::new("lab-equals-regular-onset");
    for (name, m) in corpus.members() {
        t.record(name, verify_mth(engine, m, corpus, cutoff)?);
    }
    out.push(t.finish());

    let mut t = Tally::new("split-stage-equals-pd");
    for (name, m) in corpus.members() {
        let cert = proself_certificate(engine, m, cutoff)?;
        let check = match (&cert, pd(engine, m, cutoff)?) {
            (ProselfResult::PdBound(k), PdResult::Finite(d)) => Check::holds(*k == d, format!("bound {k}, pd {d}")),
            (ProselfResult::PdBound(k), other) => Check::fail(format!("bound {k}, pd {other}")),
            (ProselfResult::Violation(r), _) => Check::fail(r.clone()),
            (other, _) => Check::not_applicable(other.to_string()),
        };
        t.record(name, check);
    }
    out.push(t.finish());

    let mut t = Tally::new("redundancy-bounds-lab");
    if cutoff > 0 {
        for (name, m) in corpus.members() {
            if let Some(r) = strongly_redundant_from(engine, m, cutoff, Some(corpus))? {
                if let Some(c) = r.lab_check {
                    t.record(name, c);
                }
            }
        }
    }
    out.push(t.note("checks lab <= m, flags strict inequality").finish());
    Ok(out)
}
