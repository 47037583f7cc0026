use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use extbound::algebra::{direct_sum, dual_module, Representation};
use extbound::bounds::{lab, Bound};
use extbound::exactla::Matrix;
use extbound::fixtures;
use extbound::homology::{ext_table, pd, MinimalResolution};
use extbound::repmod::{decompose, in_add, is_isomorphic};
use extbound::Engine;

const MAX: usize = 5;

fn random_invertible(alg: &extbound::algebra::Algebra, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let f = alg.field();
    loop {
        let data = (0..n * n).map(|_| f.random(rng)).collect();
        let m = Matrix::new(f.clone(), n, n, data).unwrap();
        if m.is_invertible() {
            return m;
        }
    }
}

/// `M` transported along random vertexwise base changes.
fn scramble(m: &Representation, seed: u64) -> Representation {
    let alg = m.algebra().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g: Vec<Matrix> = m.dims().iter().map(|&d| random_invertible(&alg, d, &mut rng)).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .zip(m.maps())
        .map(|(a, x)| g[a.target].mul(x).unwrap().mul(&g[a.source].inverse().unwrap()).unwrap())
        .collect();
    Representation::new(alg, m.dims().to_vec(), maps).unwrap()
}

/// A fixture algebra with a direct sum of its listed indecomposables.
fn sums() -> impl Strategy<Value = (&'static str, Vec<usize>)> {
    (0..fixtures::NAMES.len()).prop_flat_map(|i| {
        let name = fixtures::NAMES[i];
        let n = fixtures::indecomposables(name).unwrap().len();
        (Just(name), proptest::collection::vec(0usize..=2, n))
    })
}

fn build(name: &str, mults: &[usize]) -> Representation {
    let c = fixtures::indecomposables(name).unwrap();
    let parts: Vec<Representation> =
        c.modules().zip(mults).flat_map(|(m, &k)| std::iter::repeat_n(m.clone(), k)).collect();
    direct_sum(c.algebra(), &parts).unwrap()
}

fn add(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn ext_is_additive_in_both_arguments((name, mults) in sums(), member in 0usize..5) {
        let e = Engine::default();
        let c = fixtures::indecomposables(name).unwrap();
        let n = c.members()[member % c.len()].1.clone();
        let m = build(name, &mults);
        let mut expected = vec![0; MAX + 1];
        let mut back = vec![0; MAX + 1];
        for ((_, x), &k) in c.members().iter().zip(&mults) {
            for _ in 0..k {
                expected = add(&expected, &ext_table(&e, x, &n, MAX).unwrap().dims);
                back = add(&back, &ext_table(&e, &n, x, MAX).unwrap().dims);
            }
        }
        prop_assert_eq!(ext_table(&e, &m, &n, MAX).unwrap().dims, expected);
        prop_assert_eq!(ext_table(&e, &n, &m, MAX).unwrap().dims, back);
    }

    #[test]
    fn base_change_preserves_invariants((name, mults) in sums(), seed in any::<u64>()) {
        let e = Engine::default();
        let m = build(name, &mults);
        let s = scramble(&m, seed);
        let iso = is_isomorphic(&m, &s, &e.search_options(), &mut e.rng()).unwrap();
        prop_assert!(iso.is_iso());
        let w = iso.witness().unwrap();
        prop_assert!(w.intertwines().unwrap() && w.is_iso());
        let r = fixtures::indecomposables(name).unwrap();
        for n in r.modules() {
            prop_assert_eq!(ext_table(&e, &m, n, MAX).unwrap().dims, ext_table(&e, &s, n, MAX).unwrap().dims);
        }
        prop_assert_eq!(pd(&e, &m, 12).unwrap().to_string(), pd(&e, &s, 12).unwrap().to_string());
    }

    #[test]
    fn decomposition_recovers_multiplicities((name, mults) in sums(), seed in any::<u64>()) {
        let e = Engine::default();
        let m = scramble(&build(name, &mults), seed);
        let d = decompose(&m, &e.search_options(), &mut e.rng()).unwrap();
        prop_assert!(d.is_complete());
        prop_assert_eq!(d.summands.len(), mults.iter().sum::<usize>());
        let c = fixtures::indecomposables(name).unwrap();
        let mut counted = vec![0; c.len()];
        for s in &d.summands {
            let hits: Vec<usize> = c
                .modules()
                .enumerate()
                .filter(|(_, x)| is_isomorphic(x, &s.module, &e.search_options(), &mut e.rng()).unwrap().is_iso())
                .map(|(i, _)| i)
                .collect();
            prop_assert_eq!(hits.len(), 1);
            counted[hits[0]] += 1;
        }
        prop_assert_eq!(counted, mults);
    }

    #[test]
    fn summands_lie_in_add((name, mults) in sums(), seed in any::<u64>()) {
        let m = scramble(&build(name, &mults), seed);
        let c = fixtures::indecomposables(name).unwrap();
        for (x, &k) in c.modules().zip(&mults) {
            let member = in_add(x, &m).unwrap();
            prop_assert_eq!(member.member, k > 0);
            if let Some(w) = member.witness {
                prop_assert!(w.verify().unwrap());
            }
        }
    }

    #[test]
    fn duality_reverses_ext((name, a) in sums(), b in proptest::collection::vec(0usize..=1, 5)) {
        let e = Engine::default();
        let c = fixtures::indecomposables(name).unwrap();
        let m = build(name, &a);
        let n = build(name, &b[..c.len()]);
        let dm = dual_module(&m).unwrap();
        let dn = dual_module(&n).unwrap();
        prop_assert_eq!(ext_table(&e, &m, &n, MAX).unwrap().dims, ext_table(&e, &dn, &dm, MAX).unwrap().dims);
    }

    #[test]
    fn resolutions_verify((name, mults) in sums(), seed in any::<u64>()) {
        let m = scramble(&build(name, &mults), seed);
        let r = MinimalResolution::compute(&m, 4).unwrap();
        r.verify().unwrap();
        let c = fixtures::indecomposables(name).unwrap();
        let mut expected = vec![0; m.dims().len()];
        for (x, &k) in c.modules().zip(&mults) {
            let rx = MinimalResolution::compute(x, 4).unwrap();
            for _ in 0..k {
                expected = add(&expected, &rx.multiplicities(4));
            }
        }
        prop_assert_eq!(r.multiplicities(4), expected);
    }

    #[test]
    fn lab_of_a_sum_is_the_max((name, mults) in sums()) {
        let e = Engine::default();
        let c = fixtures::indecomposables(name).unwrap();
        let m = build(name, &mults);
        let whole = lab(&e, &m, &c, 20).unwrap().bound;
        let parts = c
            .modules()
            .zip(&mults)
            .filter(|(_, &k)| k > 0)
            .map(|(x, _)| lab(&e, x, &c, 20).unwrap().bound)
            .fold(Bound::Exact(0), Bound::join);
        prop_assert_eq!(whole, parts);
    }
}
