//! Periodicity certificates for syzygies over the self-injective fixtures,
//! and the vanishing onsets they decide.

use extbound::homology::{pd, vanishing_onset, PdResult};
use extbound::{fixtures, Engine};

fn main() -> extbound::Result<()> {
    let engine = Engine::default();
    for (alg, member) in [("LOOP2", "S"), ("CNAK2", "S1"), ("CNAK2", "S2")] {
        let m = fixtures::module(alg, member)?;
        let d = pd(&engine, &m, 20)?;
        println!("{alg}/{member}: pd {d}");
        if let PdResult::PeriodicInfinite(c) = &d {
            println!("  witness re-verifies: {}", c.verify(&engine, &m)?);
        }
        let onset = vanishing_onset(&engine, &m, &m, 20)?;
        println!("  onset of Ext^i({member}, {member}): {} (evidence {:?})", onset.status, onset.evidence);
    }
    Ok(())
}
