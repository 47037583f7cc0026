use extbound::algebra::{direct_sum, dual_module, projective_module, regular_module, simple_module, zero_module};
use extbound::fixtures;
use extbound::repmod::{
    cosyzygy, decompose, hom_basis, in_add, is_isomorphic, kernel, projective_cover, radical, syzygy, top, IsoResult,
    ModuleMap, SearchOptions,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(7)
}

#[test]
fn hom_dimensions_over_a2() {
    let a2 = fixtures::algebra("A2").unwrap();
    let p1 = projective_module(&a2, 0).unwrap();
    let s1 = simple_module(&a2, 0).unwrap();
    assert_eq!(hom_basis(&p1, &s1).unwrap().len(), 1);
    assert_eq!(hom_basis(&s1, &p1).unwrap().len(), 0);
    for name in fixtures::NAMES {
        for m in fixtures::indecomposables(name).unwrap().modules() {
            let end = hom_basis(m, m).unwrap();
            assert!(!end.is_empty());
            for f in &end {
                assert!(f.intertwines().unwrap());
            }
        }
    }
}

#[test]
fn add_membership_examples() {
    let a2 = fixtures::algebra("A2").unwrap();
    let s1 = simple_module(&a2, 0).unwrap();
    let s2 = simple_module(&a2, 1).unwrap();
    let p2 = projective_module(&a2, 1).unwrap();
    let r = regular_module(&a2).unwrap();
    let yes = in_add(&s2, &p2).unwrap();
    assert!(yes.member);
    assert!(yes.witness.unwrap().verify().unwrap());
    assert!(!in_add(&s1, &r).unwrap().member);
    assert!(in_add(&r, &r).unwrap().member);
    assert!(in_add(&zero_module(&a2), &s1).unwrap().member);
    // P1 ⊕ P1 is in add(P1), the witness uses copies of P1
    let p1 = projective_module(&a2, 0).unwrap();
    let pp = direct_sum(&a2, &[p1.clone(), p1.clone()]).unwrap();
    let w = in_add(&pp, &p1).unwrap().witness.unwrap();
    assert!(w.verify().unwrap());
}

#[test]
fn isomorphism_examples() {
    let a2 = fixtures::algebra("A2").unwrap();
    let opts = SearchOptions::default();
    let s1 = simple_module(&a2, 0).unwrap();
    let s2 = simple_module(&a2, 1).unwrap();
    let p2 = projective_module(&a2, 1).unwrap();
    assert!(is_isomorphic(&p2, &s2, &opts, &mut rng()).unwrap().is_iso());
    assert!(matches!(is_isomorphic(&s1, &s2, &opts, &mut rng()).unwrap(), IsoResult::NotIso(_)));
    let w = is_isomorphic(&s1, &s1, &opts, &mut rng()).unwrap();
    assert_eq!(w.witness().unwrap(), &ModuleMap::identity(&s1));
    // CNAK2: P1 and P2 share dimension vectors but are not isomorphic
    let c = fixtures::indecomposables("CNAK2").unwrap();
    let r = is_isomorphic(c.get("P1").unwrap(), c.get("P2").unwrap(), &opts, &mut rng()).unwrap();
    assert!(matches!(r, IsoResult::NotIso(_)), "{r:?}");
}

#[test]
fn isomorphism_after_base_change() {
    // P1 ⊕ S1 over A2 against S1 ⊕ P1: a permutation, not the identity
    let a2 = fixtures::algebra("A2").unwrap();
    let p1 = projective_module(&a2, 0).unwrap();
    let s1 = simple_module(&a2, 0).unwrap();
    let x = direct_sum(&a2, &[p1.clone(), s1.clone()]).unwrap();
    let y = direct_sum(&a2, &[s1, p1]).unwrap();
    let r = is_isomorphic(&x, &y, &SearchOptions::default(), &mut rng()).unwrap();
    let f = r.witness().expect("isomorphic");
    assert!(f.intertwines().unwrap() && f.is_iso());
}

#[test]
fn decomposition_examples() {
    let opts = SearchOptions::default();
    let a2 = fixtures::algebra("A2").unwrap();
    let s1 = simple_module(&a2, 0).unwrap();
    let d = decompose(&s1, &opts, &mut rng()).unwrap();
    assert_eq!(d.summands.len(), 1);
    assert!(d.is_complete());

    let p1 = projective_module(&a2, 0).unwrap();
    let m = direct_sum(&a2, &[p1, s1]).unwrap();
    let d = decompose(&m, &opts, &mut rng()).unwrap();
    assert!(d.is_complete());
    let mut dims: Vec<Vec<usize>> = d.summands.iter().map(|s| s.module.dims().to_vec()).collect();
    dims.sort();
    assert_eq!(dims, vec![vec![1, 0], vec![1, 1]]);
    for s in &d.summands {
        assert_eq!(s.projection.after(&s.inclusion).unwrap(), ModuleMap::identity(&s.module));
    }

    let nak3 = fixtures::algebra("NAK3").unwrap();
    let r = regular_module(&nak3).unwrap();
    let d = decompose(&r, &opts, &mut rng()).unwrap();
    assert!(d.is_complete());
    let mut dims: Vec<Vec<usize>> = d.summands.iter().map(|s| s.module.dims().to_vec()).collect();
    dims.sort();
    assert_eq!(dims, vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 0]]);
    assert_eq!(d.multiplicities().unwrap().unwrap().len(), 3);
}

#[test]
fn decomposition_reassembles_and_doubles() {
    let opts = SearchOptions::default();
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        let corpus = fixtures::indecomposables(name).unwrap();
        let all: Vec<_> = corpus.modules().cloned().collect();
        let m = direct_sum(&alg, &all).unwrap();
        let d = decompose(&m, &opts, &mut rng()).unwrap();
        assert!(d.is_complete(), "{name}");
        assert_eq!(d.summands.len(), all.len(), "{name}");
        let total: usize = d.summands.iter().map(|s| s.module.total_dim()).sum();
        assert_eq!(total, m.total_dim());
        let parts: Vec<_> = d.summands.iter().map(|s| s.module.clone()).collect();
        let back = direct_sum(&alg, &parts).unwrap();
        assert!(is_isomorphic(&back, &m, &opts, &mut rng()).unwrap().is_iso(), "{name}");
        // Krull–Schmidt: M ⊕ M has every multiplicity doubled
        let mm = direct_sum(&alg, &[m.clone(), m.clone()]).unwrap();
        let dd = decompose(&mm, &opts, &mut rng()).unwrap();
        let single = d.multiplicities().unwrap().unwrap();
        let double = dd.multiplicities().unwrap().unwrap();
        assert_eq!(single.len(), double.len(), "{name}");
        assert!(double.iter().all(|&(_, k)| k == 2), "{name}");
        assert!(single.iter().all(|&(_, k)| k == 1), "{name}");
    }
}

#[test]
fn radical_and_top() {
    let a2 = fixtures::algebra("A2").unwrap();
    let p1 = projective_module(&a2, 0).unwrap();
    assert_eq!(radical(&p1).unwrap().0.dims(), &[0, 1]);
    assert!(radical(&simple_module(&a2, 0).unwrap()).unwrap().0.is_zero());
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name).unwrap();
        for i in 0..alg.num_vertices() {
            let mut unit = vec![0; alg.num_vertices()];
            unit[i] = 1;
            assert_eq!(top(&projective_module(&alg, i).unwrap()).unwrap(), unit);
        }
    }
}

#[test]
fn projective_cover_examples() {
    let a2 = fixtures::algebra("A2").unwrap();
    let s1 = simple_module(&a2, 0).unwrap();
    let c = projective_cover(&s1).unwrap();
    assert_eq!(c.generators, vec![0]);
    assert!(c.map.is_surjective());
    assert_eq!(kernel(&c.map).unwrap().0.dims(), &[0, 1]);

    let p1 = projective_module(&a2, 0).unwrap();
    let c = projective_cover(&p1).unwrap();
    assert!(c.map.is_iso());

    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let s = simple_module(&loop2, 0).unwrap();
    let c = projective_cover(&s).unwrap();
    assert_eq!(c.projective.total_dim(), 2);
    let k = kernel(&c.map).unwrap().0;
    assert!(is_isomorphic(&k, &s, &SearchOptions::default(), &mut rng()).unwrap().is_iso());
}

#[test]
fn cover_kernels_lie_in_the_radical() {
    for name in fixtures::NAMES {
        for m in fixtures::indecomposables(name).unwrap().modules() {
            let c = projective_cover(m).unwrap();
            let (_, incl) = kernel(&c.map).unwrap();
            let (_, rad) = radical(&c.projective).unwrap();
            for v in 0..incl.comps().len() {
                assert!(rad.comp(v).spans(incl.comp(v)).unwrap());
            }
        }
    }
}

#[test]
fn syzygy_examples() {
    let opts = SearchOptions::default();
    let a2 = fixtures::algebra("A2").unwrap();
    let o = syzygy(&simple_module(&a2, 0).unwrap(), 1).unwrap();
    assert!(is_isomorphic(&o, &projective_module(&a2, 1).unwrap(), &opts, &mut rng()).unwrap().is_iso());

    let loop2 = fixtures::algebra("LOOP2").unwrap();
    let s = simple_module(&loop2, 0).unwrap();
    assert!(is_isomorphic(&syzygy(&s, 1).unwrap(), &s, &opts, &mut rng()).unwrap().is_iso());

    let nak3 = fixtures::algebra("NAK3").unwrap();
    let co = cosyzygy(&simple_module(&nak3, 2).unwrap(), 1).unwrap();
    assert!(is_isomorphic(&co, &simple_module(&nak3, 1).unwrap(), &opts, &mut rng()).unwrap().is_iso());
}

#[test]
fn cosyzygies_mirror_syzygies_of_the_dual() {
    for name in fixtures::NAMES {
        for m in fixtures::indecomposables(name).unwrap().modules() {
            let dm = dual_module(m).unwrap();
            for k in 0..=4 {
                assert_eq!(cosyzygy(m, k).unwrap().dims(), syzygy(&dm, k).unwrap().dims());
            }
        }
    }
}

#[test]
fn double_dual_is_isomorphic() {
    let opts = SearchOptions::default();
    for name in fixtures::NAMES {
        for m in fixtures::indecomposables(name).unwrap().modules() {
            let dd = dual_module(&dual_module(m).unwrap()).unwrap();
            assert!(is_isomorphic(&dd, m, &opts, &mut rng()).unwrap().is_iso());
        }
    }
}
