use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Scalar};

use super::quiver::{Path, Quiver};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coef: Scalar,
    pub path: Path,
}

/// A k-linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<Term>,
}

impl Relation {
    pub fn new(terms: Vec<Term>) -> Self {
        Relation { terms }
    }

    /// A single path set to zero.
    pub fn monomial(field: &FieldSpec, path: Path) -> Self {
        Relation { terms: vec![Term { coef: field.one(), path }] }
    }

    pub fn source(&self) -> usize {
        self.terms[0].path.source()
    }

    pub fn target(&self) -> usize {
        self.terms[0].path.target()
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|t| t.path.len()).min().unwrap_or(0)
    }

    pub fn reversed(&self) -> Relation {
        Relation { terms: self.terms.iter().map(|t| Term { coef: t.coef.clone(), path: t.path.reversed() }).collect() }
    }
}

/// A quiver with admissible relations and a nilpotency bound `N`: every path
/// of length at least `N` is declared to lie in the relation ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraPresentation {
    pub name: Option<String>,
    pub field: FieldSpec,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub nilpotency_bound: usize,
}

impl AlgebraPresentation {
    pub fn new(field: FieldSpec, quiver: Quiver, relations: Vec<Relation>, nilpotency_bound: usize) -> Self {
        AlgebraPresentation { name: None, field, quiver, relations, nilpotency_bound }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Checks admissibility and combines like terms in every relation.
    pub(crate) fn normalized(&self) -> Result<AlgebraPresentation> {
        if self.nilpotency_bound == 0 {
            return Err(Error::Presentation("nilpotency bound must be at least 1".into()));
        }
        let mut relations = Vec::with_capacity(self.relations.len());
        for (ri, rel) in self.relations.iter().enumerate() {
            if rel.terms.is_empty() {
                return Err(Error::Presentation(format!("relation {ri} is empty")));
            }
            let (s, t) = (rel.source(), rel.target());
            let mut combined: BTreeMap<Path, Scalar> = BTreeMap::new();
            for term in &rel.terms {
                if !self.field.contains(&term.coef) {
                    return Err(Error::Presentation(format!("relation {ri} has a coefficient outside {}", self.field)));
                }
                let p = &term.path;
                if p.len() < 2 {
                    return Err(Error::Presentation(format!(
                        "relation {ri} contains the path {} of length {} (admissible relations need length >= 2)",
                        self.quiver.describe_path(p),
                        p.len()
                    )));
                }
                self.quiver.path_from_arrows(p.arrows().to_vec())?;
                if p.source() != s || p.target() != t {
                    return Err(Error::Presentation(format!("relation {ri} mixes non-parallel paths")));
                }
                let entry = combined.entry(p.clone()).or_insert_with(|| self.field.zero());
                *entry = self.field.add(entry, &term.coef);
            }
            let terms: Vec<Term> =
                combined.into_iter().filter(|(_, c)| !c.is_zero()).map(|(path, coef)| Term { coef, path }).collect();
            if terms.is_empty() {
                return Err(Error::Presentation(format!("relation {ri} is identically zero")));
            }
            relations.push(Relation { terms });
        }
        Ok(AlgebraPresentation { relations, ..self.clone() })
    }

    /// Arrows and relation paths reversed; applying it twice is the identity.
    pub fn opposite(&self) -> AlgebraPresentation {
        AlgebraPresentation {
            name: self.name.as_ref().map(|n| match n.strip_suffix("^op") {
                Some(base) => base.to_string(),
                None => format!("{n}^op"),
            }),
            field: self.field.clone(),
            quiver: self.quiver.opposite(),
            relations: self.relations.iter().map(Relation::reversed).collect(),
            nilpotency_bound: self.nilpotency_bound,
        }
    }

    /// Canonical text form; the algebra fingerprint hashes this. The name is
    /// not part of it.
    pub(crate) fn canonical_text(&self) -> String {
        let mut s = format!("field={};N={};V=", self.field, self.nilpotency_bound);
        for v in self.quiver.vertices() {
            s.push_str(&format!("{}:{v}|", v.len()));
        }
        s.push_str(";A=");
        for a in self.quiver.arrows() {
            s.push_str(&format!("{}:{}:{}>{}|", a.name.len(), a.name, a.source, a.target));
        }
        s.push_str(";R=");
        for r in &self.relations {
            for t in &r.terms {
                s.push_str(&format!("{}@{:?}+", t.coef, t.path.arrows()));
            }
            s.push('|');
        }
        s
    }
}
