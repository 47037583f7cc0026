//! Replays every bound law over a fixture corpus and prints the tallies.

use extbound::bounds::{verify_bound_laws, verify_certificates, verify_finitistic_laws};
use extbound::{fixtures, Engine};

fn main() -> extbound::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "NAK3".into());
    let engine = Engine::default();
    let corpus = fixtures::indecomposables(&name)?;
    let mut reports = verify_bound_laws(&engine, &corpus, 12)?;
    reports.extend(verify_finitistic_laws(&engine, &corpus, 12)?);
    reports.extend(verify_certificates(&engine, &corpus, 12)?);
    for r in reports {
        println!("{:<36} {:<8} checked {:>3} skipped {:>2} {}", r.statement, r.status, r.checked, r.skipped, r.note);
        for f in r.failures {
            println!("    {f}");
        }
    }
    Ok(())
}
