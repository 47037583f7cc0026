use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};

use super::build::Algebra;
use super::quiver::Path;

struct RepData {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A finite-dimensional left module, given as a quiver representation: one
/// vector space per vertex and, for each arrow `a: s -> t`, a
/// `dims[t] x dims[s]` matrix. Cloning is cheap.
#[derive(Clone)]
pub struct Representation(Arc<RepData>);

impl Representation {
    /// Validates shapes, the coefficient field, every relation and the
    /// nilpotency bound.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let rep = Representation::new_unchecked(algebra, dims, maps)?;
        rep.check_relations()?;
        Ok(rep)
    }

    /// Checks shapes and fields only. Used for modules built by construction
    /// (submodules, quotients, sums) which satisfy the relations already.
    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != algebra.num_vertices() {
            return Err(Error::Representation(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                algebra.num_vertices()
            )));
        }
        if maps.len() != algebra.num_arrows() {
            return Err(Error::Representation(format!(
                "{} arrow matrices for {} arrows",
                maps.len(),
                algebra.num_arrows()
            )));
        }
        for (a, m) in algebra.quiver().arrows().iter().zip(&maps) {
            if m.field() != algebra.field() {
                return Err(Error::Representation(format!("matrix of arrow {:?} is over {}", a.name, m.field())));
            }
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::Representation(format!(
                    "arrow {:?} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation(Arc::new(RepData { algebra, dims, maps })))
    }

    fn check_relations(&self) -> Result<()> {
        let alg = self.algebra();
        let field = alg.field();
        for (ri, rel) in alg.presentation().relations.iter().enumerate() {
            let (s, t) = (rel.source(), rel.target());
            let mut acc = Matrix::zeros(field, self.dims()[t], self.dims()[s]);
            for term in &rel.terms {
                acc = acc.add(&self.path_action(&term.path).scale(&term.coef))?;
            }
            if !acc.is_zero() {
                return Err(Error::Representation(format!("relation {ri} does not act as zero")));
            }
        }
        // J^N M = 0: iterate the radical N times.
        let n = alg.presentation().nilpotency_bound;
        let mut layer: Vec<Matrix> = self.dims().iter().map(|&d| Matrix::identity(field, d)).collect();
        for _ in 0..n {
            layer = self.arrow_image(&layer)?;
        }
        if layer.iter().any(|m| m.cols() > 0) {
            return Err(Error::Representation(format!("paths of length {n} do not act as zero")));
        }
        Ok(())
    }

    /// Given spanning sets per vertex, the span of their images under all
    /// arrows, as column-space bases.
    pub(crate) fn arrow_image(&self, spans: &[Matrix]) -> Result<Vec<Matrix>> {
        let alg = self.algebra();
        let field = alg.field();
        let mut out: Vec<Matrix> = self.dims().iter().map(|&d| Matrix::zeros(field, d, 0)).collect();
        for (ai, a) in alg.quiver().arrows().iter().enumerate() {
            let img = self.map(ai).mul(&spans[a.source])?;
            out[a.target] = out[a.target].hstack(&img)?;
        }
        Ok(out.into_iter().map(|m| m.column_space()).collect())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.0.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    /// Action of a path: the composite of its arrow matrices in application
    /// order, a `dims[target] x dims[source]` matrix.
    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.algebra().field(), self.dims()[p.source()]);
        for &a in p.arrows() {
            acc = self.map(a).mul(&acc).expect("shapes validated");
        }
        acc
    }

    /// Action of the basis element `b` of the algebra.
    pub fn basis_action(&self, b: usize) -> Matrix {
        self.path_action(&self.algebra().basis()[b])
    }

    pub fn same_algebra(&self, other: &Representation) -> Result<()> {
        if self.algebra().same_as(other.algebra()) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// SHA-256 over the algebra fingerprint and the canonical entries.
    pub fn digest(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update(self.algebra().fingerprint());
        for d in self.dims() {
            h.update((*d as u64).to_le_bytes());
        }
        for m in self.maps() {
            for e in m.entries() {
                h.update(e.to_string().as_bytes());
                h.update(b",");
            }
            h.update(b";");
        }
        h.finalize().into()
    }

    pub fn ptr_eq(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Vector at vertex `v` with a `1` in position `k`.
    pub fn unit_vector(&self, v: usize, k: usize) -> Vec<Scalar> {
        let field = self.algebra().field();
        let mut x = vec![field.zero(); self.dims()[v]];
        x[k] = field.one();
        x
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other)
            || (self.algebra().same_as(other.algebra()) && self.dims() == other.dims() && self.maps() == other.maps())
    }
}

impl Eq for Representation {}

impl Hash for Representation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.algebra().fingerprint().hash(state);
        self.dims().hash(state);
        self.maps().hash(state);
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alg = self.algebra();
        write!(f, "Representation {{ dims: {:?}", self.dims())?;
        for (a, m) in alg.quiver().arrows().iter().zip(self.maps()) {
            write!(f, ", {}: {:?}", a.name, m.to_string_rows())?;
        }
        write!(f, " }}")
    }
}
