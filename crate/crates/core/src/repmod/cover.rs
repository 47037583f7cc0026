use crate::algebra::{dual_module, projective_sum, Representation};
use crate::error::Result;
use crate::exactla::Matrix;

use super::maps::{kernel, submodule, ModuleMap};

/// Radical `rad M = J·M`: at vertex `i`, the span of the images of the
/// arrows ending at `i`. Returned with its inclusion into `M`.
pub fn radical(m: &Representation) -> Result<(Representation, ModuleMap)> {
    let field = m.algebra().field();
    let full: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::identity(field, d)).collect();
    submodule(m, m.arrow_image(&full)?)
}

/// Multiplicities of the simples in `M / rad M`.
pub fn top(m: &Representation) -> Result<Vec<usize>> {
    let field = m.algebra().field();
    let full: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::identity(field, d)).collect();
    let rad = m.arrow_image(&full)?;
    Ok(m.dims().iter().zip(&rad).map(|(d, r)| d - r.cols()).collect())
}

/// Multiplicities of the simples in the socle: at vertex `i`, the common
/// kernel of the arrows leaving `i`.
pub fn socle(m: &Representation) -> Result<Vec<usize>> {
    let alg = m.algebra();
    let field = alg.field();
    let mut out = Vec::with_capacity(m.dims().len());
    for (v, &d) in m.dims().iter().enumerate() {
        let mut stacked = Matrix::zeros(field, 0, d);
        for (ai, a) in alg.quiver().arrows().iter().enumerate() {
            if a.source == v {
                stacked = stacked.vstack(m.map(ai))?;
            }
        }
        out.push(d - stacked.rank());
    }
    Ok(out)
}

/// A minimal projective cover `π: P -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Generator vertices in order; `P = ⊕ P(g)`.
    pub generators: Vec<usize>,
    /// `(vertex, index)`: generator `g` of `P` maps to the unit vector
    /// `index` of `M` at `vertex`.
    pub tops: Vec<(usize, usize)>,
    pub projective: Representation,
    pub map: ModuleMap,
}

/// Top vectors are the standard unit vectors completing `rad M_i` to
/// `M_i`, taken in basis order; the generator of `P(i)` maps to each.
pub fn projective_cover(m: &Representation) -> Result<ProjectiveCover> {
    let alg = m.algebra().clone();
    let field = alg.field();
    let full: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::identity(field, d)).collect();
    let rad = m.arrow_image(&full)?;
    let mut tops: Vec<(usize, usize)> = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for k in r.complement_units() {
            tops.push((v, k));
        }
    }
    let generators: Vec<usize> = tops.iter().map(|&(v, _)| v).collect();
    let projective = projective_sum(&alg, &generators)?;
    let nv = alg.num_vertices();
    let mut comps = Vec::with_capacity(nv);
    for j in 0..nv {
        let mut cols = Vec::with_capacity(projective.dims()[j]);
        for &(i, k) in &tops {
            let gen = m.unit_vector(i, k);
            for &p in alg.paths_between(i, j) {
                cols.push(m.basis_action(p).mul_vec(&gen)?);
            }
        }
        comps.push(Matrix::from_columns(field, m.dims()[j], &cols));
    }
    let map = ModuleMap::new_unchecked(projective.clone(), m.clone(), comps)?;
    Ok(ProjectiveCover { generators, tops, projective, map })
}

/// `Ω^m M`, iterated kernels of minimal projective covers.
pub fn syzygy(m: &Representation, steps: usize) -> Result<Representation> {
    let mut cur = m.clone();
    for _ in 0..steps {
        if cur.is_zero() {
            break;
        }
        let cover = projective_cover(&cur)?;
        cur = kernel(&cover.map)?.0;
    }
    Ok(cur)
}

/// `Ω^{-m} M = D(Ω^m(D M))`, the cosyzygies of a minimal injective
/// coresolution.
pub fn cosyzygy(m: &Representation, steps: usize) -> Result<Representation> {
    dual_module(&syzygy(&dual_module(m)?, steps)?)
}
