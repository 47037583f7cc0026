use crate::algebra::{direct_sum, Representation};
use crate::error::{Error, Result};
use crate::exactla::Matrix;

use super::maps::{column_map, hom_basis, row_map, ModuleMap};

/// `C` as a summand of `T^n`: `v ∘ u = id_C`.
#[derive(Clone, Debug)]
pub struct AddWitness {
    pub copies: usize,
    pub sum: Representation,
    pub u: ModuleMap,
    pub v: ModuleMap,
}

impl AddWitness {
    pub fn verify(&self) -> Result<bool> {
        Ok(self.v.after(&self.u)? == ModuleMap::identity(self.u.source()))
    }
}

#[derive(Clone, Debug)]
pub struct AddMembership {
    pub member: bool,
    pub witness: Option<AddWitness>,
}

/// Trace-ideal test: `C ∈ add T` iff `id_C` lies in the span of the
/// composites `v_l ∘ u_k` of basis maps `C -> T -> C`.
pub fn in_add(c: &Representation, t: &Representation) -> Result<AddMembership> {
    c.same_algebra(t)?;
    let alg = c.algebra().clone();
    if c.is_zero() {
        let sum = direct_sum(&alg, &[])?;
        let u = ModuleMap::zero(c, &sum)?;
        let v = ModuleMap::zero(&sum, c)?;
        return Ok(AddMembership { member: true, witness: Some(AddWitness { copies: 0, sum, u, v }) });
    }
    let us = hom_basis(c, t)?;
    let vs = hom_basis(t, c)?;
    if us.is_empty() || vs.is_empty() {
        return Ok(AddMembership { member: false, witness: None });
    }
    let field = alg.field();
    let mut columns = Vec::with_capacity(us.len() * vs.len());
    for u in &us {
        for v in &vs {
            columns.push(v.after(u)?.flatten());
        }
    }
    let id = ModuleMap::identity(c).flatten();
    let sys = Matrix::from_columns(field, id.len(), &columns);
    let Some(coef) = sys.solve(&id)? else {
        return Ok(AddMembership { member: false, witness: None });
    };
    // One copy of T per u_k that occurs; its outgoing map is Σ_l c_kl v_l.
    let mut u_parts = Vec::new();
    let mut v_parts = Vec::new();
    for (k, u) in us.iter().enumerate() {
        let row = &coef[k * vs.len()..(k + 1) * vs.len()];
        if row.iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut acc = ModuleMap::zero(t, c)?;
        for (l, x) in row.iter().enumerate() {
            if !x.is_zero() {
                acc = acc.add(&vs[l].scale(x))?;
            }
        }
        u_parts.push(u.clone());
        v_parts.push(acc);
    }
    let copies = u_parts.len();
    let sum = direct_sum(&alg, &vec![t.clone(); copies])?;
    let u = column_map(c, &sum, &u_parts)?;
    let v = row_map(&sum, c, &v_parts)?;
    let witness = AddWitness { copies, sum, u, v };
    if !witness.verify()? {
        return Err(Error::OracleMismatch("add-membership witness does not compose to the identity".into()));
    }
    Ok(AddMembership { member: true, witness: Some(witness) })
}
