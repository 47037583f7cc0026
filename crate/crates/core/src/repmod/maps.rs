use crate::algebra::Representation;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

/// A module homomorphism given by one matrix per vertex,
/// `comps[v]: M_v -> N_v` of shape `N.dims[v] x M.dims[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    comps: Vec<Matrix>,
}

impl ModuleMap {
    /// Checks shapes and the intertwining equations `f_t X_a = Y_a f_s`.
    pub fn new(source: Representation, target: Representation, comps: Vec<Matrix>) -> Result<Self> {
        let f = ModuleMap::new_unchecked(source, target, comps)?;
        if !f.intertwines()? {
            return Err(Error::Representation("vertex maps do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, comps: Vec<Matrix>) -> Result<Self> {
        source.same_algebra(&target)?;
        if comps.len() != source.dims().len() {
            return Err(Error::Representation("wrong number of vertex maps".into()));
        }
        for (v, m) in comps.iter().enumerate() {
            if m.rows() != target.dims()[v] || m.cols() != source.dims()[v] {
                return Err(Error::Representation(format!(
                    "vertex map at {v} has shape {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.dims()[v],
                    source.dims()[v]
                )));
            }
        }
        Ok(ModuleMap { source, target, comps })
    }

    pub fn intertwines(&self) -> Result<bool> {
        let alg = self.source.algebra().clone();
        for (ai, a) in alg.quiver().arrows().iter().enumerate() {
            let lhs = self.comps[a.target].mul(self.source.map(ai))?;
            let rhs = self.target.map(ai).mul(&self.comps[a.source])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn identity(m: &Representation) -> ModuleMap {
        let field = m.algebra().field();
        let comps = m.dims().iter().map(|&d| Matrix::identity(field, d)).collect();
        ModuleMap { source: m.clone(), target: m.clone(), comps }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Result<ModuleMap> {
        let field = source.algebra().field();
        let comps = source.dims().iter().zip(target.dims()).map(|(&s, &t)| Matrix::zeros(field, t, s)).collect();
        ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    pub fn comp(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target != self.source {
            return Err(Error::Representation("composition of non-composable maps".into()));
        }
        let comps =
            self.comps.iter().zip(&first.comps).map(|(g, f)| g.mul(f)).collect::<std::result::Result<_, _>>()?;
        Ok(ModuleMap { source: first.source.clone(), target: self.target.clone(), comps })
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Representation("sum of maps with different endpoints".into()));
        }
        let comps =
            self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect::<std::result::Result<_, _>>()?;
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), comps })
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(Matrix::is_invertible)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Matrix::rank).sum()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let comps = self.comps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMap { source: self.target.clone(), target: self.source.clone(), comps })
    }

    /// Coordinates: vertex by vertex, each matrix row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.comps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub(crate) fn from_flat(source: &Representation, target: &Representation, flat: &[Scalar]) -> Result<ModuleMap> {
        let field = source.algebra().field();
        let mut comps = Vec::new();
        let mut off = 0;
        for (&s, &t) in source.dims().iter().zip(target.dims()) {
            comps.push(Matrix::new(field.clone(), t, s, flat[off..off + s * t].to_vec())?);
            off += s * t;
        }
        debug_assert_eq!(off, flat.len());
        ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
    }

    /// Endomorphism power (square maps only).
    pub(crate) fn pow(&self, e: usize) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|m| m.pow(e)).collect(),
        }
    }
}

/// Number of coordinates of a map `M -> N`.
pub(crate) fn hom_coords(m: &Representation, n: &Representation) -> usize {
    m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum()
}

/// Canonical basis of `Hom(M, N)`: the kernel basis of the intertwining
/// system, unknowns ordered vertex by vertex and row-major.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    m.same_algebra(n)?;
    let alg = m.algebra().clone();
    let field = alg.field();
    let nv = alg.num_vertices();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims()[v] * m.dims()[v];
    }
    let unknowns = offset[nv];
    let eqs: usize = alg.quiver().arrows().iter().map(|a| n.dims()[a.target] * m.dims()[a.source]).sum();
    let mut sys = Matrix::zeros(field, eqs, unknowns);
    let mut row = 0;
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let x = m.map(ai);
        let y = n.map(ai);
        // (f_t X)[r, c] - (Y f_s)[r, c] = 0
        for r in 0..n.dims()[t] {
            for c in 0..m.dims()[s] {
                for k in 0..m.dims()[t] {
                    let coef = x.get(k, c);
                    if !coef.is_zero() {
                        let var = offset[t] + r * m.dims()[t] + k;
                        let cur = sys.get(row, var).clone();
                        sys.set(row, var, field.add(&cur, coef));
                    }
                }
                for k in 0..n.dims()[s] {
                    let coef = y.get(r, k);
                    if !coef.is_zero() {
                        let var = offset[s] + k * m.dims()[s] + c;
                        let cur = sys.get(row, var).clone();
                        sys.set(row, var, field.sub(&cur, coef));
                    }
                }
                row += 1;
            }
        }
    }
    sys.kernel_basis().into_iter().map(|v| ModuleMap::from_flat(m, n, &v)).collect()
}

/// Submodule spanned by the given columns at each vertex (which must be
/// linearly independent and closed under the arrows), with its inclusion.
pub fn submodule(m: &Representation, bases: Vec<Matrix>) -> Result<(Representation, ModuleMap)> {
    let alg = m.algebra().clone();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut maps = Vec::with_capacity(alg.num_arrows());
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let image = m.map(ai).mul(&bases[a.source])?;
        let mut cols = Vec::with_capacity(image.cols());
        for c in 0..image.cols() {
            let y = bases[a.target]
                .solve(&image.column(c))?
                .ok_or_else(|| Error::Representation(format!("subspace not closed under arrow {:?}", a.name)))?;
            cols.push(y);
        }
        maps.push(Matrix::from_columns(alg.field(), dims[a.target], &cols));
    }
    let sub = Representation::new_unchecked(alg, dims, maps)?;
    let incl = ModuleMap::new_unchecked(sub.clone(), m.clone(), bases)?;
    Ok((sub, incl))
}

/// Quotient by a submodule given by column bases, with the projection. The
/// quotient basis at each vertex is the greedy complement by unit vectors.
pub fn quotient(m: &Representation, sub_bases: &[Matrix]) -> Result<(Representation, ModuleMap)> {
    let alg = m.algebra().clone();
    let field = alg.field();
    let mut reps = Vec::new();
    let mut projs = Vec::new();
    for (v, b) in sub_bases.iter().enumerate() {
        let b = b.column_space();
        let units = b.complement_units();
        let complement = Matrix::identity(field, m.dims()[v]).select_columns(&units);
        let change = b.hstack(&complement)?;
        let inv = change.inverse().ok_or_else(|| Error::Representation("degenerate subspace basis".into()))?;
        projs.push(inv.block(b.cols(), 0, units.len(), m.dims()[v]));
        reps.push(complement);
    }
    let dims: Vec<usize> = projs.iter().map(Matrix::rows).collect();
    let mut maps = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        maps.push(projs[a.target].mul(&m.map(ai).mul(&reps[a.source])?)?);
    }
    let q = Representation::new_unchecked(alg, dims, maps)?;
    let proj = ModuleMap::new_unchecked(m.clone(), q.clone(), projs)?;
    Ok((q, proj))
}

/// Kernel of a map as a submodule of its source.
pub fn kernel(f: &ModuleMap) -> Result<(Representation, ModuleMap)> {
    let field = f.source.algebra().field();
    let bases =
        f.comps.iter().zip(f.source.dims()).map(|(c, &d)| Matrix::from_columns(field, d, &c.kernel_basis())).collect();
    submodule(&f.source, bases)
}

/// Image of a map as a submodule of its target.
pub fn image(f: &ModuleMap) -> Result<(Representation, ModuleMap)> {
    submodule(&f.target, f.comps.iter().map(Matrix::column_space).collect())
}

/// Cokernel of a map as a quotient of its target.
pub fn cokernel(f: &ModuleMap) -> Result<(Representation, ModuleMap)> {
    let bases: Vec<Matrix> = f.comps.iter().map(Matrix::column_space).collect();
    quotient(&f.target, &bases)
}

/// Maps into or out of a direct sum, assembled from components.
pub fn column_map(source: &Representation, target: &Representation, parts: &[ModuleMap]) -> Result<ModuleMap> {
    // target = ⊕ parts[k].target, stacked in order
    let field = source.algebra().field();
    let mut comps = Vec::new();
    for v in 0..source.dims().len() {
        let mut m = Matrix::zeros(field, 0, source.dims()[v]);
        for p in parts {
            m = m.vstack(p.comp(v))?;
        }
        if m.rows() != target.dims()[v] {
            return Err(Error::Representation("column map does not match the target sum".into()));
        }
        comps.push(m);
    }
    ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
}

pub fn row_map(source: &Representation, target: &Representation, parts: &[ModuleMap]) -> Result<ModuleMap> {
    // source = ⊕ parts[k].source, stacked in order
    let field = source.algebra().field();
    let mut comps = Vec::new();
    for v in 0..target.dims().len() {
        let mut m = Matrix::zeros(field, target.dims()[v], 0);
        for p in parts {
            m = m.hstack(p.comp(v))?;
        }
        if m.cols() != source.dims()[v] {
            return Err(Error::Representation("row map does not match the source sum".into()));
        }
        comps.push(m);
    }
    ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
}

/// Block-diagonal sum of maps `⊕ f_k : ⊕ A_k -> ⊕ B_k`.
pub fn diagonal_map(source: &Representation, target: &Representation, parts: &[ModuleMap]) -> Result<ModuleMap> {
    let field = source.algebra().field();
    let mut comps = Vec::new();
    for v in 0..source.dims().len() {
        let mut m = Matrix::zeros(field, 0, 0);
        for p in parts {
            m = m.direct_sum(p.comp(v))?;
        }
        comps.push(m);
    }
    ModuleMap::new_unchecked(source.clone(), target.clone(), comps)
}
