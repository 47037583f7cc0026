use crate::algebra::{projective_sum, Representation};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::repmod::{hom_basis, hom_coords};
use crate::Engine;

use super::resolution::MinimalResolution;

/// `dims[i] = dim Ext^i(M, N)` for `0 ≤ i ≤ max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub max_degree: usize,
    pub dims: Vec<usize>,
}

impl ExtTable {
    /// CSV with one row per degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dimension\n");
        for (i, d) in self.dims.iter().enumerate() {
            out.push_str(&format!("{i},{d}\n"));
        }
        out
    }
}

/// Coboundary `δ^k: Hom(P_k, N) -> Hom(P_{k+1}, N)`, `φ ↦ φ ∘ d_{k+1}`, in
/// generator coordinates `Hom(P_k, N) = ⊕_g N_g`.
fn coboundary(res: &MinimalResolution, k: usize, n: &Representation) -> Result<Matrix> {
    let alg = n.algebra();
    let field = alg.field();
    let src = res.generators(k);
    let dst = res.generators(k + 1);
    let cols: usize = src.iter().map(|&g| n.dims()[g]).sum();
    let rows: usize = dst.iter().map(|&h| n.dims()[h]).sum();
    let mut out = Matrix::zeros(field, rows, cols);
    if rows == 0 || cols == 0 {
        return Ok(out);
    }
    let cover = res.cover(k + 1).expect("term computed");
    let incl = res.inclusion(k).expect("term computed");
    let mut r0 = 0;
    for (t, &h) in dst.iter().enumerate() {
        let (_, top) = cover.tops[t];
        // d(e_h) as a vector of (P_k)_h, blocked by the generators of P_k
        let image = incl.comp(h).column(top);
        let mut pos = 0;
        let mut c0 = 0;
        for &g in src {
            let paths = alg.paths_between(g, h);
            let mut block = Matrix::zeros(field, n.dims()[h], n.dims()[g]);
            for (off, &p) in paths.iter().enumerate() {
                let c = &image[pos + off];
                if !c.is_zero() {
                    block = block.add(&n.basis_action(p).scale(c))?;
                }
            }
            out.put_block(r0, c0, &block);
            pos += paths.len();
            c0 += n.dims()[g];
        }
        r0 += n.dims()[h];
    }
    Ok(out)
}

/// Ext dimensions from the cohomology of `Hom(P_•, N)`.
pub fn ext_dims_hom_complex(res: &MinimalResolution, n: &Representation, max_degree: usize) -> Result<Vec<usize>> {
    let mut ranks = Vec::with_capacity(max_degree + 1);
    for k in 0..=max_degree {
        ranks.push(coboundary(res, k, n)?.rank());
    }
    Ok((0..=max_degree)
        .map(|k| {
            let hom: usize = res.generators(k).iter().map(|&g| n.dims()[g]).sum();
            let prev = if k == 0 { 0 } else { ranks[k - 1] };
            hom - ranks[k] - prev
        })
        .collect())
}

/// Ext dimensions as stable homs: `dim Hom(Ω^i M, N)` minus the rank of the
/// restriction `Hom(P_{i-1}, N) -> Hom(Ω^i M, N)`.
pub fn ext_dims_stable_hom(res: &MinimalResolution, n: &Representation, max_degree: usize) -> Result<Vec<usize>> {
    let alg = n.algebra();
    let mut out = Vec::with_capacity(max_degree + 1);
    for i in 0..=max_degree {
        let omega = res.syzygy(i).expect("syzygy computed");
        let hom = hom_basis(&omega, n)?;
        if i == 0 || hom.is_empty() {
            out.push(hom.len());
            continue;
        }
        let p = projective_sum(alg, res.generators(i - 1))?;
        let incl = res.inclusion(i - 1).expect("syzygy computed");
        let restricted: Vec<Vec<_>> =
            hom_basis(&p, n)?.iter().map(|f| f.after(incl).map(|g| g.flatten())).collect::<Result<_>>()?;
        let rank = Matrix::from_columns(alg.field(), hom_coords(&omega, n), &restricted).rank();
        out.push(hom.len() - rank);
    }
    Ok(out)
}

/// `Ext^i(M, N)` for `i ≤ max_degree`, cross-checked by the stable-hom
/// route unless disabled in the configuration.
pub fn ext_table(engine: &Engine, m: &Representation, n: &Representation, max_degree: usize) -> Result<ExtTable> {
    m.same_algebra(n)?;
    let res = engine.resolution(m, max_degree + 1)?;
    let dims = ext_dims_hom_complex(&res, n, max_degree)?;
    if engine.config().cross_check {
        let oracle = ext_dims_stable_hom(&res, n, max_degree)?;
        if oracle != dims {
            return Err(Error::OracleMismatch(format!(
                "Ext tables disagree: Hom complex {dims:?}, stable Hom {oracle:?}"
            )));
        }
    }
    Ok(ExtTable { max_degree, dims })
}
