//! Minimal projective resolution of the first simple over NAK3, with the
//! syzygies and the multiplicities of each term.

use extbound::algebra::simple_module;
use extbound::fixtures;
use extbound::homology::MinimalResolution;

fn main() -> extbound::Result<()> {
    let alg = fixtures::algebra("NAK3")?;
    let s1 = simple_module(&alg, 0)?;
    let res = MinimalResolution::compute(&s1, 5)?;
    res.verify()?;
    for k in 0..res.computed_terms() {
        let syz = res.syzygy(k).expect("computed");
        println!("P_{k} multiplicities {:?}, syzygy dims {:?}", res.multiplicities(k), syz.dims());
        if syz.is_zero() {
            break;
        }
    }
    println!("terminated: {}, pd = {:?}", res.terminated(), res.pd());
    Ok(())
}
