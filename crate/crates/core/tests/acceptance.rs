//! The acceptance criteria, one PASS/FAIL line each, at exact tolerances.

use std::process::ExitCode;
use std::time::Instant;

use extbound::algebra::{direct_sum, dual_module, regular_module, simple_module, Representation};
use extbound::bounds::{
    corpus_bounds, lab, min_t_regular, proself_certificate, rab, rab_direct, strongly_redundant_from,
    ultimately_closed_at, verify_mth, Bound, CheckStatus, Corpus, ProselfResult,
};
use extbound::fixtures;
use extbound::homology::{
    ext_dims_hom_complex, ext_dims_stable_hom, ext_table, id, pd, vanishing_onset, MinimalResolution, OnsetStatus,
    PdResult,
};
use extbound::repmod::syzygy;
use extbound::tilting::{arc_scan, coresolution_in_add, gsc_report, is_tilting, Verdict};
use extbound::Engine;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Engine) -> Outcome);

const MAX: usize = 8;
const K: usize = 20;

fn corpora() -> Vec<(&'static str, Corpus)> {
    fixtures::NAMES.iter().map(|&n| (n, fixtures::indecomposables(n).unwrap())).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ext(e: &Engine, m: &Representation, n: &Representation, max: usize) -> Result<Vec<usize>, String> {
    ext_table(e, m, n, max).map(|t| t.dims).map_err(|x| x.to_string())
}

fn dimension_shifting(e: &Engine) -> Outcome {
    let mut checked = 0;
    for (name, c) in corpora() {
        for (a, m) in c.members() {
            let full: Vec<Vec<usize>> = c.modules().map(|n| ext(e, m, n, MAX)).collect::<Result<_, _>>()?;
            for shift in 0..MAX {
                let om = syzygy(m, shift).map_err(|x| x.to_string())?;
                for ((b, n), row) in c.members().iter().zip(&full) {
                    let shifted = ext(e, &om, n, MAX - shift)?;
                    for i in 1..=MAX - shift {
                        ensure(row[i + shift] == shifted[i], || {
                            format!("{name}: Ext^{}({a},{b}) != Ext^{i}(Ω^{shift} {a},{b})", i + shift)
                        })?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} equalities"))
}

fn oracle_agreement(_: &Engine) -> Outcome {
    let mut checked = 0;
    for (name, c) in corpora() {
        for (a, m) in c.members() {
            let res = MinimalResolution::compute(m, MAX + 1).map_err(|x| x.to_string())?;
            for (b, n) in c.members() {
                let h = ext_dims_hom_complex(&res, n, MAX).map_err(|x| x.to_string())?;
                let s = ext_dims_stable_hom(&res, n, MAX).map_err(|x| x.to_string())?;
                ensure(h == s, || format!("{name}: ({a},{b}) hom complex {h:?} vs stable hom {s:?}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} pairs"))
}

fn resolution_multiplicities(e: &Engine) -> Outcome {
    let mut checked = 0;
    for (name, c) in corpora() {
        let alg = c.algebra().clone();
        let simples: Vec<Representation> = (0..alg.num_vertices()).map(|j| simple_module(&alg, j).unwrap()).collect();
        for (a, m) in c.members() {
            let res = MinimalResolution::compute(m, MAX).map_err(|x| x.to_string())?;
            for (j, s) in simples.iter().enumerate() {
                let dims = ext(e, m, s, MAX)?;
                for (i, &d) in dims.iter().enumerate() {
                    ensure(d == res.multiplicities(i)[j], || format!("{name}: Ext^{i}({a}, S{j}) = {d}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} equalities"))
}

fn duality_transfer(e: &Engine) -> Outcome {
    let mut checked = 0;
    for (name, c) in corpora() {
        let dual = c.dual().map_err(|x| x.to_string())?;
        for ((a, m), (_, dm)) in c.members().iter().zip(dual.members()) {
            for ((b, n), (_, dn)) in c.members().iter().zip(dual.members()) {
                let left = ext(e, m, n, MAX)?;
                let right = ext(e, dn, dm, MAX)?;
                ensure(left == right, || format!("{name}: Ext({a},{b}) {left:?} vs dual {right:?}"))?;
                checked += 1;
            }
            let l = lab(e, m, &c, K).map_err(|x| x.to_string())?.bound;
            let r =
                rab_direct(e, &dual_module(m).map_err(|x| x.to_string())?, &dual, K).map_err(|x| x.to_string())?.bound;
            if l.is_exact() {
                ensure(l == r, || format!("{name}: lab({a}) = {l}, rab(D {a}) = {r}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} equalities"))
}

fn global_bound_equals_id_regular(e: &Engine) -> Outcome {
    for (name, want) in [("LOOP2", 0), ("CNAK2", 0), ("NAK3", 2)] {
        let c = fixtures::indecomposables(name).unwrap();
        let b = corpus_bounds(e, &c, K).map_err(|x| x.to_string())?;
        let idr = id(e, &regular_module(c.algebra()).unwrap(), K).map_err(|x| x.to_string())?;
        ensure(b.gab == Bound::Exact(want), || format!("{name}: gAb = {}", b.gab))?;
        ensure(idr.finite() == Some(want), || format!("{name}: id R = {idr}"))?;
    }
    Ok("LOOP2 0, CNAK2 0, NAK3 2".into())
}

fn left_right_global(e: &Engine) -> Outcome {
    let mut seen = Vec::new();
    for (name, c) in corpora() {
        let b = corpus_bounds(e, &c, K).map_err(|x| x.to_string())?;
        if let (Bound::Exact(l), Bound::Exact(r)) = (b.glab, b.grab) {
            ensure(l == r, || format!("{name}: glAb {l} vs grAb {r}"))?;
            seen.push(format!("{name} {l}"));
        }
    }
    ensure(seen.len() == fixtures::NAMES.len(), || format!("only {} corpora exact", seen.len()))?;
    Ok(seen.join(", "))
}

fn regular_onset_theorem(e: &Engine) -> Outcome {
    let mut passed = 0;
    for (name, c) in corpora() {
        for (a, m) in c.members() {
            let check = verify_mth(e, m, &c, K).map_err(|x| x.to_string())?;
            ensure(check.status != CheckStatus::Fail, || format!("{name}/{a}: {}", check.detail))?;
            passed += usize::from(check.status == CheckStatus::Pass);
        }
    }
    let c = fixtures::indecomposables("NAK3").unwrap();
    let s1 = c.get("S1").unwrap();
    let l = lab(e, s1, &c, K).map_err(|x| x.to_string())?.bound;
    let t = min_t_regular(e, s1, K).map_err(|x| x.to_string())?.status;
    ensure(l == Bound::Exact(2) && t == OnsetStatus::CertifiedVanishes(2), || format!("NAK3 S1: lab {l}, onset {t}"))?;
    Ok(format!("{passed} members certified, NAK3 S1 gives 2"))
}

fn split_stage_and_arc(e: &Engine) -> Outcome {
    let mut bounds = 0;
    for (name, c) in corpora() {
        for (a, m) in c.members() {
            match proself_certificate(e, m, K).map_err(|x| x.to_string())? {
                ProselfResult::PdBound(k) => {
                    let d = pd(e, m, K).map_err(|x| x.to_string())?;
                    ensure(d.finite() == Some(k), || format!("{name}/{a}: split stage {k}, pd {d}"))?;
                    bounds += 1;
                }
                ProselfResult::Violation(v) => return Err(format!("{name}/{a}: {v}")),
                _ => {}
            }
        }
        let scan = arc_scan(e, c.algebra(), &c, K).map_err(|x| x.to_string())?;
        ensure(scan.counterexamples.is_empty(), || format!("{name}: {:?}", scan.counterexamples))?;
    }
    Ok(format!("{bounds} split-stage bounds match pd, no counterexamples"))
}

fn tilting_fixture(e: &Engine) -> Outcome {
    let a2 = fixtures::algebra("A2").unwrap();
    let p1 = fixtures::module("A2", "P1").unwrap();
    let s1 = fixtures::module("A2", "S1").unwrap();
    let t = direct_sum(&a2, &[p1, s1.clone()]).unwrap();
    let rep = is_tilting(e, &t, K, 8).map_err(|x| x.to_string())?;
    ensure(rep.verdict == Verdict::Holds, || format!("P1+S1: {}", rep.verdict))?;
    ensure(rep.t1.finite() == Some(1), || format!("P1+S1: pd {}", rep.t1))?;
    ensure(rep.t3.length() == Some(1) && rep.t3.verify().unwrap(), || "P1+S1: coresolution".into())?;

    let rep = is_tilting(e, &s1, K, 8).map_err(|x| x.to_string())?;
    ensure(matches!(rep.verdict, Verdict::Fails(_)), || format!("S1: {}", rep.verdict))?;
    ensure(rep.t3.failure.is_some(), || "S1: coresolution unexpectedly succeeded".into())?;
    ensure(rep.t1.is_decided() && rep.t2.is_certified_true(), || "S1 should fail only at the coresolution".into())?;

    for name in fixtures::NAMES {
        let r = regular_module(&fixtures::algebra(name).unwrap()).unwrap();
        let rep = is_tilting(e, &r, K, 8).map_err(|x| x.to_string())?;
        ensure(rep.verdict == Verdict::Holds, || format!("{name}: R {}", rep.verdict))?;
        let c = coresolution_in_add(e, &r, &r, 8).map_err(|x| x.to_string())?;
        ensure(c.length() == Some(0), || format!("{name}: R coresolution {:?}", c.failure))?;
    }
    Ok("P1+S1 tilting of length 1, S1 rejected, R tilting on all fixtures".into())
}

fn redundancy_and_closure(e: &Engine) -> Outcome {
    let c = fixtures::indecomposables("LOOP2").unwrap();
    let s = c.get("S").unwrap();
    let red = strongly_redundant_from(e, s, K, Some(&c)).map_err(|x| x.to_string())?.ok_or("LOOP2 S: none found")?;
    ensure(red.m == 0, || format!("LOOP2 S: strongly redundant from {}", red.m))?;
    let check = red.lab_check.ok_or("no lab check")?;
    ensure(check.status == CheckStatus::Pass, || check.detail.clone())?;
    let l = lab(e, s, &c, K).map_err(|x| x.to_string())?.bound;
    ensure(l == Bound::Exact(0), || format!("LOOP2 S: lab {l}"))?;

    let s1 = fixtures::module("CNAK2", "S1").unwrap();
    let closed = ultimately_closed_at(e, &s1, K).map_err(|x| x.to_string())?.ok_or("CNAK2 S1: not closed")?;
    ensure(closed.m == 2, || format!("CNAK2 S1: closed at {}", closed.m))?;
    Ok("LOOP2 S redundant from 0 with lab 0, CNAK2 S1 closed at 2".into())
}

fn gorenstein_symmetry(e: &Engine) -> Outcome {
    for (name, want) in [("LOOP2", 0), ("CNAK2", 0), ("NAK3", 2)] {
        let g = gsc_report(e, &fixtures::algebra(name).unwrap(), K).map_err(|x| x.to_string())?;
        ensure(g.equal == Some(true) && g.id_left.finite() == Some(want) && g.id_right.finite() == Some(want), || {
            format!("{name}: {} vs {}", g.id_left, g.id_right)
        })?;
    }
    Ok("LOOP2 (0,0), CNAK2 (0,0), NAK3 (2,2)".into())
}

fn periodicity(e: &Engine) -> Outcome {
    for (alg, member, want) in [("LOOP2", "S", (0, 1)), ("CNAK2", "S1", (0, 2))] {
        let m = fixtures::module(alg, member).unwrap();
        match pd(e, &m, K).map_err(|x| x.to_string())? {
            PdResult::PeriodicInfinite(c) => {
                ensure((c.preperiod, c.period) == want, || format!("{alg}/{member}: ({}, {})", c.preperiod, c.period))?;
                ensure(c.verify(e, &m).map_err(|x| x.to_string())?, || format!("{alg}/{member}: witness"))?;
            }
            other => return Err(format!("{alg}/{member}: {other}")),
        }
    }
    let s = fixtures::module("LOOP2", "S").unwrap();
    let o = vanishing_onset(e, &s, &s, K).map_err(|x| x.to_string())?;
    ensure(o.status == OnsetStatus::CertifiedNeverVanishes, || format!("LOOP2 onset {}", o.status))?;
    let s1 = fixtures::module("CNAK2", "S1").unwrap();
    let t = ext(e, &s1, &s1, 4)?;
    ensure(t == vec![1, 0, 1, 0, 1], || format!("CNAK2 table {t:?}"))?;
    Ok("(0,1) and (0,2) re-verify, CNAK2 table [1,0,1,0,1]".into())
}

fn finitistic(e: &Engine) -> Outcome {
    let mut seen = Vec::new();
    for (name, c) in corpora() {
        let b = corpus_bounds(e, &c, K).map_err(|x| x.to_string())?;
        let want = match name {
            "LOOP2" | "CNAK2" => Some(0),
            "NAK3" => Some(2),
            _ => None,
        };
        if let Some(w) = want {
            ensure(b.fpd == Bound::Exact(w), || format!("{name}: fPD {}", b.fpd))?;
        }
        let (Bound::Exact(f), Bound::Exact(fl)) = (b.fpd, b.flab) else {
            return Err(format!("{name}: fPD {} fLAb {}", b.fpd, b.flab));
        };
        ensure(f <= fl, || format!("{name}: fPD {f} > fLAb {fl}"))?;
        let r = regular_module(c.algebra()).unwrap();
        let rr = rab(e, &r, &c, K).map_err(|x| x.to_string())?.bound;
        if let Bound::Exact(v) = rr {
            ensure(f <= v, || format!("{name}: fPD {f} > rab(R) {v}"))?;
        }
        seen.push(format!("{name} {f}"));
    }
    Ok(format!("fPD {}", seen.join(", ")))
}

fn main() -> ExitCode {
    let e = Engine::default();
    let criteria: [Criterion; 13] = [
        ("dimension shifting", dimension_shifting),
        ("ext oracle agreement", oracle_agreement),
        ("minimal resolution multiplicities", resolution_multiplicities),
        ("duality transfer", duality_transfer),
        ("global bound equals id of the regular module", global_bound_equals_id_regular),
        ("left and right global bounds agree", left_right_global),
        ("left bound equals regular onset", regular_onset_theorem),
        ("split stage and conjecture scan", split_stage_and_arc),
        ("tilting fixture", tilting_fixture),
        ("strong redundancy and ultimate closure", redundancy_and_closure),
        ("gorenstein symmetry instances", gorenstein_symmetry),
        ("periodicity certificates", periodicity),
        ("finitistic statistics", finitistic),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f(&e) {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.2}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
