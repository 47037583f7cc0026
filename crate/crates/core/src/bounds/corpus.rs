use std::sync::Arc;

use crate::algebra::{dual_module, injective_module, projective_module, simple_module, Algebra, Representation};
use crate::error::{Error, Result};
use crate::repmod::{is_isomorphic, syzygy};
use crate::Engine;

/// A finite, named family of modules over one algebra: the stand-in for a
/// class of modules. Every bound computed over it is restricted to it.
#[derive(Clone, Debug)]
pub struct Corpus {
    algebra: Arc<Algebra>,
    members: Vec<(String, Representation)>,
    pub provenance: String,
    /// Contains every indecomposable module up to isomorphism.
    pub complete: bool,
}

impl Corpus {
    pub fn new(algebra: Arc<Algebra>, provenance: impl Into<String>) -> Self {
        Corpus { algebra, members: Vec::new(), provenance: provenance.into(), complete: false }
    }

    pub fn push(&mut self, name: impl Into<String>, m: Representation) -> Result<()> {
        let name = name.into();
        if !m.algebra().same_as(&self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if self.members.iter().any(|(n, _)| *n == name) {
            return Err(Error::Representation(format!("duplicate corpus member name {name:?}")));
        }
        self.members.push((name, m));
        Ok(())
    }

    pub fn with(mut self, name: impl Into<String>, m: Representation) -> Result<Self> {
        self.push(name, m)?;
        Ok(self)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn members(&self) -> &[(String, Representation)] {
        &self.members
    }

    pub fn modules(&self) -> impl Iterator<Item = &Representation> {
        self.members.iter().map(|(_, m)| m)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Representation> {
        self.members.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    /// `D` applied memberwise, over the opposite algebra.
    pub fn dual(&self) -> Result<Corpus> {
        let mut out = Corpus::new(self.algebra.opposite()?, format!("dual({})", self.provenance));
        out.complete = self.complete;
        for (n, m) in &self.members {
            out.push(n.clone(), dual_module(m)?)?;
        }
        Ok(out)
    }

    /// The members at the given indices, in that order.
    pub fn subcorpus(&self, indices: &[usize]) -> Result<Corpus> {
        let mut out = Corpus::new(self.algebra.clone(), format!("subset({})", self.provenance));
        for &i in indices {
            let (n, m) = &self.members[i];
            out.push(n.clone(), m.clone())?;
        }
        Ok(out)
    }

    pub fn simples(alg: &Arc<Algebra>) -> Result<Corpus> {
        Self::per_vertex(alg, "simples", "S", simple_module)
    }

    pub fn projectives(alg: &Arc<Algebra>) -> Result<Corpus> {
        Self::per_vertex(alg, "projectives", "P", projective_module)
    }

    pub fn injectives(alg: &Arc<Algebra>) -> Result<Corpus> {
        Self::per_vertex(alg, "injectives", "I", injective_module)
    }

    fn per_vertex(
        alg: &Arc<Algebra>,
        provenance: &str,
        prefix: &str,
        make: fn(&Arc<Algebra>, usize) -> Result<Representation>,
    ) -> Result<Corpus> {
        let mut c = Corpus::new(alg.clone(), provenance);
        for (i, v) in alg.quiver().vertices().iter().enumerate() {
            c.push(format!("{prefix}{v}"), make(alg, i)?)?;
        }
        Ok(c)
    }

    /// Seeds and their nonzero syzygies up to `depth`, without repeating
    /// isomorphism classes. A module whose isomorphism test against an
    /// earlier member is undetermined is kept.
    pub fn syzygy_closure(engine: &Engine, seeds: &Corpus, depth: usize) -> Result<Corpus> {
        let mut out = Corpus::new(seeds.algebra.clone(), format!("syzygy-closure({}, {depth})", seeds.provenance));
        let opts = engine.search_options();
        let mut rng = engine.rng();
        for (name, seed) in &seeds.members {
            for k in 0..=depth {
                let omega = syzygy(seed, k)?;
                if omega.is_zero() {
                    break;
                }
                let mut known = false;
                for m in out.modules() {
                    if is_isomorphic(m, &omega, &opts, &mut rng)?.is_iso() {
                        known = true;
                        break;
                    }
                }
                if !known {
                    let label = if k == 0 { name.clone() } else { format!("Omega{k}({name})") };
                    out.push(label, omega)?;
                }
            }
        }
        Ok(out)
    }
}
