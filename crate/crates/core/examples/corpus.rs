//! Builds corpora from generators, writes one to a file and reads it back.

use extbound::bounds::Corpus;
use extbound::io::{self, AlgebraRef};
use extbound::{fixtures, Engine};

fn main() -> extbound::Result<()> {
    let engine = Engine::default();
    let alg = fixtures::algebra("NAK3")?;
    let simples = Corpus::simples(&alg)?;
    let seeds = Corpus::new(alg.clone(), "seed").with("S1", simples.get("S1").expect("simple").clone())?;
    let closure = Corpus::syzygy_closure(&engine, &seeds, 3)?;
    for c in [&simples, &Corpus::projectives(&alg)?, &Corpus::injectives(&alg)?, &closure] {
        let dims: Vec<_> = c.members().iter().map(|(n, m)| format!("{n}{:?}", m.dims())).collect();
        println!("{}: {}", c.provenance, dims.join(" "));
    }
    let text = io::corpus_to_json(&closure, &AlgebraRef::Named("builtin:NAK3".into()));
    let path = std::env::temp_dir().join("nak3-closure.json");
    std::fs::write(&path, &text)?;
    let (back, _) = io::load_corpus(&path)?;
    println!("wrote {} and read back {} members", path.display(), back.len());
    Ok(())
}
