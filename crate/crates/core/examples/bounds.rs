//! Left and right Auslander bounds restricted to the full indecomposable
//! corpus of each fixture, with the global and finitistic statistics.

use extbound::bounds::corpus_bounds;
use extbound::{fixtures, Engine};

fn main() -> extbound::Result<()> {
    let engine = Engine::default();
    for name in fixtures::NAMES {
        let corpus = fixtures::indecomposables(name)?;
        let r = corpus_bounds(&engine, &corpus, 20)?;
        println!("{name}: glAb {} grAb {} fPD {} fID {} fLAb {}", r.glab, r.grab, r.fpd, r.fid, r.flab);
        for m in &r.members {
            println!("  {:<3} lab {:<10} rab {:<10} pd {:<24} id {}", m.name, m.lab.bound, m.rab.bound, m.pd, m.id);
        }
    }
    Ok(())
}
