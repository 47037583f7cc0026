//! Conjecture scans and Gorenstein symmetry over every fixture.

use extbound::tilting::{arc_scan, ewtc_check, gsc_report};
use extbound::{fixtures, Engine};

fn main() -> extbound::Result<()> {
    let engine = Engine::default();
    for name in fixtures::NAMES {
        let alg = fixtures::algebra(name)?;
        let corpus = fixtures::indecomposables(name)?;
        let scan = arc_scan(&engine, &alg, &corpus, 20)?;
        let g = gsc_report(&engine, &alg, 20)?;
        println!(
            "{name}: {} counterexamples, undetermined {:?}, id R {} vs opposite {}",
            scan.counterexamples.len(),
            scan.undetermined,
            g.id_left,
            g.id_right
        );
        for e in &scan.entries {
            let w = ewtc_check(&engine, corpus.get(&e.member).expect("member"), 20, 8)?;
            println!("  {:<3} M+R {:<26} split stage {} ewtc {}", e.member, e.generator, e.split_stage, w.outcome);
        }
    }
    Ok(())
}
