//! Ext tables between all indecomposables of each built-in algebra.

use extbound::homology::ext_table;
use extbound::{fixtures, Engine};

fn main() -> extbound::Result<()> {
    let engine = Engine::default();
    for name in fixtures::NAMES {
        let corpus = fixtures::indecomposables(name)?;
        println!("{name}");
        for (a, m) in corpus.members() {
            for (b, n) in corpus.members() {
                let t = ext_table(&engine, m, n, 6)?;
                println!("  Ext^*({a}, {b}) = {:?}", t.dims);
            }
        }
    }
    Ok(())
}
