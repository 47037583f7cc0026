use extbound::algebra::{direct_sum, projective_module, regular_module, simple_module};
use extbound::bounds::StatementStatus;
use extbound::fixtures;
use extbound::homology::PdResult;
use extbound::repmod::{cokernel, is_isomorphic, ModuleMap};
use extbound::tilting::{
    arc_scan, coresolution_in_add, ewtc_check, gsc_report, is_selforthogonal, is_tilting, is_wakamatsu,
    left_add_approximation, verify_tilting_laws, CoresolutionFailure, EwtcOutcome, Orthogonality, Verdict,
};
use extbound::Engine;

fn a2_tilting() -> (extbound::algebra::Representation, extbound::algebra::Representation) {
    let a2 = fixtures::algebra("A2").unwrap();
    let t = direct_sum(&a2, &[projective_module(&a2, 0).unwrap(), simple_module(&a2, 0).unwrap()]).unwrap();
    (t, regular_module(&a2).unwrap())
}

#[test]
fn approximation_examples() {
    let e = Engine::default();
    let (t, r) = a2_tilting();
    let a = left_add_approximation(&e, &t, &t).unwrap();
    assert!(a.map.is_iso());

    let a = left_add_approximation(&e, &r, &t).unwrap();
    assert!(a.map.is_injective());
    assert_eq!(a.map.target().dims(), &[2, 2]);
    let a2 = fixtures::algebra("A2").unwrap();
    let (c, _) = cokernel(&a.map).unwrap();
    let s1 = simple_module(&a2, 0).unwrap();
    assert!(is_isomorphic(&c, &s1, &e.search_options(), &mut e.rng()).unwrap().is_iso());

    // Hom(S2, S1) = 0
    let s2 = simple_module(&a2, 1).unwrap();
    let a = left_add_approximation(&e, &s2, &s1).unwrap();
    assert!(a.map.target().is_zero());
    assert_eq!(a.map, ModuleMap::zero(&s2, a.map.target()).unwrap());
}

#[test]
fn coresolution_examples() {
    let e = Engine::default();
    let (t, r) = a2_tilting();
    let c = coresolution_in_add(&e, &r, &r, 8).unwrap();
    assert_eq!(c.length(), Some(0));
    assert!(c.verify().unwrap());

    let c = coresolution_in_add(&e, &r, &t, 8).unwrap();
    assert_eq!(c.length(), Some(1));
    assert!(c.verify().unwrap());
    assert_eq!(c.terms[0].dims(), &[2, 2]);
    assert_eq!(c.terms[1].dims(), &[1, 0]);

    let a2 = fixtures::algebra("A2").unwrap();
    let c = coresolution_in_add(&e, &r, &simple_module(&a2, 0).unwrap(), 8).unwrap();
    assert_eq!(c.failure, Some(CoresolutionFailure::NotInjective { stage: 0 }));
}

#[test]
fn selforthogonality_examples() {
    let e = Engine::default();
    let (t, r) = a2_tilting();
    assert_eq!(is_selforthogonal(&e, &r, 10).unwrap(), Orthogonality::CertifiedTrue);
    assert_eq!(is_selforthogonal(&e, &t, 10).unwrap(), Orthogonality::CertifiedTrue);
    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let s = simple_module(&loop2, 0).unwrap();
    assert_eq!(is_selforthogonal(&e, &s, 10).unwrap(), Orthogonality::CertifiedFalse(1));
    // degree window only, as pd S1 over NAK3 needs P_2
    let nak3 = fixtures::algebra("NAK3").unwrap();
    let s2 = simple_module(&nak3, 1).unwrap();
    assert_eq!(is_selforthogonal(&e, &s2, 0).unwrap(), Orthogonality::WindowOnly);
}

#[test]
fn tilting_examples() {
    let e = Engine::default();
    let (t, _) = a2_tilting();
    let rep = is_tilting(&e, &t, 10, 8).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(rep.t1.finite(), Some(1));
    assert_eq!(rep.t3.length(), Some(1));
    let a2 = fixtures::algebra("A2").unwrap();
    let rep = is_tilting(&e, &simple_module(&a2, 0).unwrap(), 10, 8).unwrap();
    assert!(matches!(rep.verdict, Verdict::Fails(_)));
    assert!(!rep.t3.success());
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        let r = regular_module(&alg).unwrap();
        let rep = is_tilting(&e, &r, 10, 8).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds, "{name}");
        assert_eq!(rep.t3.length(), Some(0));
        assert_eq!(is_wakamatsu(&e, &r, 10, 8).unwrap().verdict, Verdict::Holds, "{name}");
    }
}

#[test]
fn wakamatsu_examples() {
    let e = Engine::default();
    let (t, _) = a2_tilting();
    let w = is_wakamatsu(&e, &t, 10, 8).unwrap();
    assert_eq!(w.verdict, Verdict::Holds);
    assert!(w.stages.iter().all(|s| s.orthogonal == Orthogonality::CertifiedTrue));
    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let w = is_wakamatsu(&e, &simple_module(&loop2, 0).unwrap(), 10, 8).unwrap();
    assert!(matches!(w.verdict, Verdict::Fails(_)));
}

#[test]
fn ewtc_examples() {
    let e = Engine::default();
    let (t, r) = a2_tilting();
    let rep = ewtc_check(&e, &t, 10, 8).unwrap();
    assert_eq!(rep.outcome, EwtcOutcome::Confirmed);
    assert_eq!(rep.pd.unwrap().finite(), Some(1));
    assert_eq!(ewtc_check(&e, &r, 10, 8).unwrap().outcome, EwtcOutcome::Confirmed);
    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let rep = ewtc_check(&e, &simple_module(&loop2, 0).unwrap(), 10, 8).unwrap();
    assert!(matches!(rep.outcome, EwtcOutcome::NotApplicable(_)));
}

#[test]
fn arc_scan_is_empty_on_fixtures() {
    let e = Engine::default();
    for name in fixtures::NAMES {
        let c = fixtures::indecomposables(name).unwrap();
        let scan = arc_scan(&e, c.algebra(), &c, 10).unwrap();
        assert!(scan.counterexamples.is_empty(), "{name}: {:?}", scan.counterexamples);
        assert_eq!(scan.entries.len(), c.len());
    }
    let c = fixtures::indecomposables("A2").unwrap();
    assert!(arc_scan(&e, &fixtures::algebra("NAK3").unwrap(), &c, 10).is_err());
}

#[test]
fn gsc_examples() {
    let e = Engine::default();
    for (name, d) in [("LOOP2", 0), ("CNAK2", 0), ("NAK3", 2), ("A2", 1)] {
        let g = gsc_report(&e, &fixtures::algebra(name).unwrap(), 10).unwrap();
        assert_eq!(g.id_left.finite(), Some(d), "{name}");
        assert_eq!(g.id_right.finite(), Some(d), "{name}");
        assert_eq!(g.equal, Some(true));
        assert!(!matches!(g.id_left, PdResult::AtLeast(_)));
    }
}

#[test]
fn tilting_laws_pass_on_fixtures() {
    let e = Engine::default();
    for name in fixtures::NAMES {
        let c = fixtures::indecomposables(name).unwrap();
        for r in verify_tilting_laws(&e, &c, 10, 8).unwrap() {
            assert_ne!(r.status, StatementStatus::Fail, "{name}: {} {:?}", r.statement, r.failures);
        }
    }
}
