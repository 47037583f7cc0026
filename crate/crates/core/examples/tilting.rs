//! Tilting and Wakamatsu checks for a few candidates over A2.

use extbound::algebra::{direct_sum, regular_module};
use extbound::tilting::{is_tilting, is_wakamatsu};
use extbound::{fixtures, Engine};

fn main() -> extbound::Result<()> {
    let engine = Engine::default();
    let alg = fixtures::algebra("A2")?;
    let p1 = fixtures::module("A2", "P1")?;
    let s1 = fixtures::module("A2", "S1")?;
    let candidates =
        [("P1+S1", direct_sum(&alg, &[p1.clone(), s1.clone()])?), ("S1", s1), ("P1", p1), ("R", regular_module(&alg)?)];
    for (name, t) in &candidates {
        let rep = is_tilting(&engine, t, 20, 8)?;
        println!("{name}: pd {}, self-orthogonal {}, tilting {}", rep.t1, rep.t2, rep.verdict);
        if let Some(n) = rep.t3.length() {
            let dims: Vec<_> = rep.t3.terms.iter().map(|x| x.dims().to_vec()).collect();
            println!("  coresolution of R of length {n}: {dims:?}");
        }
        println!("  wakamatsu {}", is_wakamatsu(&engine, t, 20, 8)?.verdict);
    }
    Ok(())
}
