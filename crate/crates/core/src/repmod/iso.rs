use rand::Rng;

use crate::algebra::Representation;
use crate::error::{Error, Result};

use super::decompose::{decompose, indecomposables_isomorphic, SearchOptions};
use super::maps::{hom_basis, ModuleMap};

/// Outcome of the isomorphism ladder. `Iso` carries a verified witness,
/// `NotIso` a structural reason.
#[derive(Clone, Debug)]
pub enum IsoResult {
    Iso(ModuleMap),
    NotIso(String),
    Undetermined(String),
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Iso(_))
    }

    pub fn witness(&self) -> Option<&ModuleMap> {
        match self {
            IsoResult::Iso(f) => Some(f),
            _ => None,
        }
    }
}

/// Ladder: dimension vectors; basis elements and pairwise sums of
/// `Hom(M, N)`; seeded random combinations; matching of indecomposable
/// factors. Over `𝔽_q`, a random combination misses an existing iso with
/// probability at most `dim M / q` per trial.
pub fn is_isomorphic<R: Rng + ?Sized>(
    m: &Representation,
    n: &Representation,
    opts: &SearchOptions,
    rng: &mut R,
) -> Result<IsoResult> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(IsoResult::NotIso(format!("dimension vectors {:?} and {:?} differ", m.dims(), n.dims())));
    }
    if m.is_zero() {
        return Ok(IsoResult::Iso(ModuleMap::zero(m, n)?));
    }
    if m == n {
        return Ok(IsoResult::Iso(ModuleMap::identity(m)));
    }
    let hom = hom_basis(m, n)?;
    if hom.is_empty() {
        return Ok(IsoResult::NotIso("Hom(M, N) = 0".into()));
    }
    if let Some(f) = hom.iter().find(|f| f.is_iso()) {
        return Ok(IsoResult::Iso(f.clone()));
    }
    for i in 0..hom.len() {
        for j in i + 1..hom.len() {
            let f = hom[i].add(&hom[j])?;
            if f.is_iso() {
                return Ok(IsoResult::Iso(f));
            }
        }
    }
    let field = m.algebra().field();
    for _ in 0..opts.random_trials {
        let mut f = hom[0].scale(&field.random(rng));
        for h in &hom[1..] {
            f = f.add(&h.scale(&field.random(rng)))?;
        }
        if f.is_iso() {
            return Ok(IsoResult::Iso(f));
        }
    }
    let dm = decompose(m, opts, rng)?;
    let dn = decompose(n, opts, rng)?;
    if !dm.is_complete() || !dn.is_complete() {
        return Ok(IsoResult::Undetermined("a decomposition is undetermined".into()));
    }
    if dm.summands.len() != dn.summands.len() {
        return Ok(IsoResult::NotIso(format!(
            "{} and {} indecomposable summands",
            dm.summands.len(),
            dn.summands.len()
        )));
    }
    let mut used = vec![false; dn.summands.len()];
    let mut total = ModuleMap::zero(m, n)?;
    for (i, x) in dm.summands.iter().enumerate() {
        let mut matched = false;
        for (j, y) in dn.summands.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(phi) = indecomposables_isomorphic(&x.module, &y.module)? {
                used[j] = true;
                matched = true;
                total = total.add(&y.inclusion.after(&phi)?.after(&x.projection)?)?;
                break;
            }
        }
        if !matched {
            return Ok(IsoResult::NotIso(format!("summand {i} of M has no isomorphic partner in N")));
        }
    }
    if !total.is_iso() {
        return Err(Error::OracleMismatch("assembled isomorphism is not invertible".into()));
    }
    Ok(IsoResult::Iso(total))
}
