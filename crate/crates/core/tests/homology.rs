use extbound::algebra::{direct_sum, dual_module, projective_module, regular_module, simple_module};
use extbound::fixtures;
use extbound::homology::{
    ext_table, id, pd, periodicity_certificate, vanishing_onset, MinimalResolution, OnsetStatus, PdResult,
};
use extbound::repmod::syzygy;
use extbound::Engine;

#[test]
fn resolution_examples() {
    let nak3 = fixtures::algebra("NAK3").unwrap();
    let r = MinimalResolution::compute(&simple_module(&nak3, 0).unwrap(), 3).unwrap();
    r.verify().unwrap();
    let mults: Vec<Vec<usize>> = (0..4).map(|k| r.multiplicities(k)).collect();
    assert_eq!(mults, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
    assert!(r.terminated());

    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let r = MinimalResolution::compute(&simple_module(&loop2, 0).unwrap(), 3).unwrap();
    r.verify().unwrap();
    assert!(!r.terminated());
    for k in 0..=3 {
        assert_eq!(r.multiplicities(k), vec![1]);
    }

    let p = projective_module(&nak3, 1).unwrap();
    let r = MinimalResolution::compute(&p, 5).unwrap();
    assert_eq!(r.multiplicities(0), vec![0, 1, 0]);
    assert_eq!(r.pd(), Some(0));
}

#[test]
fn ext_table_examples() {
    let e = Engine::default();
    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let s = simple_module(&loop2, 0).unwrap();
    assert_eq!(ext_table(&e, &s, &s, 5).unwrap().dims, vec![1; 6]);

    let cnak2 = fixtures::algebra("CNAK2").unwrap();
    let s1 = simple_module(&cnak2, 0).unwrap();
    assert_eq!(ext_table(&e, &s1, &s1, 4).unwrap().dims, vec![1, 0, 1, 0, 1]);

    let nak3 = fixtures::algebra("NAK3").unwrap();
    let p = projective_module(&nak3, 0).unwrap();
    for n in fixtures::indecomposables("NAK3").unwrap().modules() {
        let t = ext_table(&e, &p, n, 4).unwrap();
        assert!(t.dims[1..].iter().all(|&d| d == 0));
    }
}

#[test]
fn pd_and_id_examples() {
    let e = Engine::default();
    let nak3 = fixtures::algebra("NAK3").unwrap();
    assert_eq!(pd(&e, &simple_module(&nak3, 0).unwrap(), 10).unwrap().finite(), Some(2));
    let loop2 = fixtures::algebra("LOOP2").unwrap();
    match pd(&e, &simple_module(&loop2, 0).unwrap(), 10).unwrap() {
        PdResult::PeriodicInfinite(c) => assert_eq!((c.preperiod, c.period), (0, 1)),
        other => panic!("{other}"),
    }
    assert_eq!(id(&e, &regular_module(&loop2).unwrap(), 10).unwrap().finite(), Some(0));
    assert_eq!(id(&e, &regular_module(&nak3).unwrap(), 10).unwrap().finite(), Some(2));
}

#[test]
fn periodicity_examples() {
    let e = Engine::default();
    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let s = simple_module(&loop2, 0).unwrap();
    let c = periodicity_certificate(&e, &s, 6).unwrap().certificate.unwrap();
    assert_eq!((c.preperiod, c.period), (0, 1));
    assert!(c.verify(&e, &s).unwrap());

    let cnak2 = fixtures::algebra("CNAK2").unwrap();
    let s1 = simple_module(&cnak2, 0).unwrap();
    let c = periodicity_certificate(&e, &s1, 6).unwrap().certificate.unwrap();
    assert_eq!((c.preperiod, c.period), (0, 2));
    assert!(c.verify(&e, &s1).unwrap());

    let nak3 = fixtures::algebra("NAK3").unwrap();
    assert!(periodicity_certificate(&e, &simple_module(&nak3, 0).unwrap(), 6).unwrap().certificate.is_none());
}

#[test]
fn onset_examples() {
    let e = Engine::default();
    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let s = simple_module(&loop2, 0).unwrap();
    let r = regular_module(&loop2).unwrap();
    assert_eq!(vanishing_onset(&e, &s, &r, 10).unwrap().status, OnsetStatus::CertifiedVanishes(0));
    assert_eq!(vanishing_onset(&e, &s, &s, 10).unwrap().status, OnsetStatus::CertifiedNeverVanishes);

    let nak3 = fixtures::algebra("NAK3").unwrap();
    let s1 = simple_module(&nak3, 0).unwrap();
    for n in fixtures::indecomposables("NAK3").unwrap().modules() {
        let t = vanishing_onset(&e, &s1, n, 10).unwrap().vanishes().unwrap();
        assert!(t <= 2);
    }
    let rn = regular_module(&nak3).unwrap();
    assert_eq!(vanishing_onset(&e, &s1, &rn, 10).unwrap().status, OnsetStatus::CertifiedVanishes(2));
}

fn fixture_pairs() -> Vec<(String, extbound::algebra::Representation, extbound::algebra::Representation)> {
    let mut out = Vec::new();
    for name in fixtures::NAMES {
        let c = fixtures::indecomposables(name).unwrap();
        for (a, m) in c.members() {
            for (b, n) in c.members() {
                out.push((format!("{name}:{a},{b}"), m.clone(), n.clone()));
            }
        }
    }
    out
}

#[test]
fn dimension_shifting() {
    let e = Engine::default();
    for (label, m, n) in fixture_pairs() {
        let base = ext_table(&e, &m, &n, 8).unwrap().dims;
        for k in 0..=7 {
            let om = syzygy(&m, k).unwrap();
            let shifted = ext_table(&e, &om, &n, 8 - k).unwrap().dims;
            for i in 1..=8 - k {
                assert_eq!(base[i + k], shifted[i], "{label} i={i} m={k}");
            }
        }
    }
}

#[test]
fn ext_against_simples_counts_generators() {
    let e = Engine::default();
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        for m in fixtures::indecomposables(name).unwrap().modules() {
            let res = e.resolution(m, 9).unwrap();
            for j in 0..alg.num_vertices() {
                let t = ext_table(&e, m, &simple_module(&alg, j).unwrap(), 8).unwrap().dims;
                for (i, d) in t.iter().enumerate() {
                    assert_eq!(*d, res.multiplicities(i)[j]);
                }
            }
        }
    }
}

#[test]
fn ext_duality() {
    let e = Engine::default();
    for (label, m, n) in fixture_pairs() {
        let lhs = ext_table(&e, &m, &n, 8).unwrap().dims;
        let rhs = ext_table(&e, &dual_module(&n).unwrap(), &dual_module(&m).unwrap(), 8).unwrap().dims;
        assert_eq!(lhs, rhs, "{label}");
    }
}

#[test]
fn ext_is_additive() {
    let e = Engine::default();
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        let c = fixtures::indecomposables(name).unwrap();
        let ms: Vec<_> = c.modules().cloned().collect();
        for i in 0..ms.len() {
            for j in 0..ms.len() {
                let sum = direct_sum(&alg, &[ms[i].clone(), ms[j].clone()]).unwrap();
                for n in &ms {
                    let a = ext_table(&e, &ms[i], n, 6).unwrap().dims;
                    let b = ext_table(&e, &ms[j], n, 6).unwrap().dims;
                    let s = ext_table(&e, &sum, n, 6).unwrap().dims;
                    let expect: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                    assert_eq!(s, expect);
                }
            }
        }
    }
}

#[test]
fn periodic_tables_repeat() {
    let e = Engine::default();
    for name in fixtures::NAMES {
        let c = fixtures::indecomposables(name).unwrap();
        for m in c.modules() {
            if let PdResult::PeriodicInfinite(cert) = pd(&e, m, 8).unwrap() {
                for n in c.modules() {
                    let t = ext_table(&e, m, n, 10).unwrap().dims;
                    for i in cert.preperiod + 1..=10 - cert.period {
                        assert_eq!(t[i + cert.period], t[i]);
                    }
                }
            }
        }
    }
}

#[test]
fn disk_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cnak2 = fixtures::algebra("CNAK2").unwrap();
    let s1 = simple_module(&cnak2, 0).unwrap();
    let first = Engine::default().with_cache_dir(Some(dir.path().to_path_buf()));
    let t1 = ext_table(&first, &s1, &s1, 6).unwrap();
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = Engine::default().with_cache_dir(Some(dir.path().to_path_buf()));
    let t2 = ext_table(&second, &s1, &s1, 6).unwrap();
    assert_eq!(t1, t2);
}
