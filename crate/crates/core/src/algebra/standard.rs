//! Standard modules: projectives, injectives, simples, the regular module,
//! direct sums and the duality `D = Hom_k(-, k)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::Matrix;

use super::build::Algebra;
use super::quiver::Path;
use super::representation::Representation;

fn check_vertex(alg: &Algebra, i: usize) -> Result<()> {
    if i >= alg.num_vertices() {
        return Err(Error::InvalidVertex(i));
    }
    Ok(())
}

/// Position of basis element `b` among the basis paths with its endpoints.
pub(crate) fn block_position(alg: &Algebra, b: usize) -> usize {
    let p = &alg.basis()[b];
    alg.paths_between(p.source(), p.target()).binary_search(&b).expect("basis element in its block")
}

/// `P(i) = A e_i`: at vertex `j` the basis paths from `i` to `j`, arrows
/// acting by post-composition.
pub fn projective_module(alg: &Arc<Algebra>, i: usize) -> Result<Representation> {
    check_vertex(alg, i)?;
    let field = alg.field();
    let nv = alg.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|j| alg.paths_between(i, j).len()).collect();
    let mut maps = Vec::with_capacity(alg.num_arrows());
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
        let arrow = alg
            .basis_index(&Path { source: a.source, target: a.target, arrows: vec![ai] })
            .expect("arrows survive in an admissible quotient");
        for (c, &p) in alg.paths_between(i, a.source).iter().enumerate() {
            for (k, coef) in alg.product(arrow, p) {
                m.set(block_position(alg, *k), c, coef.clone());
            }
        }
        maps.push(m);
    }
    Representation::new_unchecked(alg.clone(), dims, maps)
}

/// `S(i)`: one-dimensional at `i`, all arrows zero.
pub fn simple_module(alg: &Arc<Algebra>, i: usize) -> Result<Representation> {
    check_vertex(alg, i)?;
    let dims: Vec<usize> = (0..alg.num_vertices()).map(|j| usize::from(j == i)).collect();
    zero_maps(alg, dims)
}

/// `I(i) = D(P_op(i))`, the injective envelope of `S(i)`.
pub fn injective_module(alg: &Arc<Algebra>, i: usize) -> Result<Representation> {
    check_vertex(alg, i)?;
    let op = alg.opposite()?;
    dual_module(&projective_module(&op, i)?)
}

pub fn zero_module(alg: &Arc<Algebra>) -> Representation {
    zero_maps(alg, vec![0; alg.num_vertices()]).expect("zero module")
}

fn zero_maps(alg: &Arc<Algebra>, dims: Vec<usize>) -> Result<Representation> {
    let field = alg.field();
    let maps = alg.quiver().arrows().iter().map(|a| Matrix::zeros(field, dims[a.target], dims[a.source])).collect();
    Representation::new_unchecked(alg.clone(), dims, maps)
}

/// The regular module `A = P(1) ⊕ ... ⊕ P(n)`.
pub fn regular_module(alg: &Arc<Algebra>) -> Result<Representation> {
    let parts = (0..alg.num_vertices()).map(|i| projective_module(alg, i)).collect::<Result<Vec<_>>>()?;
    direct_sum(alg, &parts)
}

/// `⊕_g P(g)` for a list of generator vertices, in the given order.
pub fn projective_sum(alg: &Arc<Algebra>, gens: &[usize]) -> Result<Representation> {
    let parts = gens.iter().map(|&g| projective_module(alg, g)).collect::<Result<Vec<_>>>()?;
    direct_sum(alg, &parts)
}

/// Direct sum; at each vertex the summands' bases are concatenated in order.
pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Representation]) -> Result<Representation> {
    for p in parts {
        if !p.algebra().same_as(alg) {
            return Err(Error::AlgebraMismatch);
        }
    }
    let nv = alg.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims()[v]).sum()).collect();
    let field = alg.field();
    let mut maps = Vec::with_capacity(alg.num_arrows());
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            m.put_block(r0, c0, p.map(ai));
            r0 += p.dims()[a.target];
            c0 += p.dims()[a.source];
        }
        maps.push(m);
    }
    Representation::new_unchecked(alg.clone(), dims, maps)
}

/// `D(M)` over the opposite algebra: same dimension vector, every arrow
/// matrix transposed.
pub fn dual_module(m: &Representation) -> Result<Representation> {
    let op = m.algebra().opposite()?;
    let maps = m.maps().iter().map(Matrix::transpose).collect();
    Representation::new_unchecked(op, m.dims().to_vec(), maps)
}
