//! JSON file formats for algebras, modules and corpora.
//!
//! An algebra reference inside a module or corpus file is either an inline
//! algebra object, a path relative to the referring file, or
//! `"builtin:NAME"`. Matrix entries are decimal strings, one list per row.
//! Writing then re-reading a file reproduces it byte for byte.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraPresentation, Arrow, Quiver, Relation, Representation, Term};
use crate::bounds::Corpus;
use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, Matrix};
use crate::fixtures;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rationals: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coef: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldDoc,
    pub quiver: QuiverDoc,
    pub relations: Vec<Vec<TermDoc>>,
    pub nilpotency_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    /// A file path or `builtin:NAME`.
    Named(String),
    Inline(Box<AlgebraDoc>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub algebra: AlgebraRef,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dims: IndexMap<String, usize>,
    pub matrices: IndexMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MemberDoc {
    pub name: String,
    pub dims: IndexMap<String, usize>,
    pub matrices: IndexMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusDoc {
    pub schema_version: u32,
    pub algebra: AlgebraRef,
    pub provenance: String,
    #[serde(default)]
    pub complete: bool,
    pub modules: Vec<MemberDoc>,
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str, location: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::format(format!("{location}:{}:{}", e.line(), e.column()), e.to_string()))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::format(path.display().to_string(), format!("cannot read file: {e}")))
}

// ---- algebras ----

pub fn algebra_from_doc(doc: &AlgebraDoc, location: &str) -> Result<Arc<Algebra>> {
    let field = match (doc.field.p, doc.field.rationals) {
        (Some(p), None) => {
            FieldSpec::prime(p).map_err(|e| Error::format(format!("{location}: field.p"), e.to_string()))?
        }
        (None, Some(true)) => FieldSpec::rationals(),
        _ => {
            return Err(Error::format(format!("{location}: field"), "expected {\"p\": prime} or {\"rationals\": true}"))
        }
    };
    let vertex = |name: &str, at: String| {
        doc.quiver
            .vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::format(at, format!("unknown vertex {name:?}")))
    };
    let mut arrows = Vec::with_capacity(doc.quiver.arrows.len());
    for (i, a) in doc.quiver.arrows.iter().enumerate() {
        arrows.push(Arrow {
            name: a.name.clone(),
            source: vertex(&a.from, format!("{location}: quiver.arrows[{i}].from"))?,
            target: vertex(&a.to, format!("{location}: quiver.arrows[{i}].to"))?,
        });
    }
    let quiver = Quiver::new(doc.quiver.vertices.clone(), arrows)
        .map_err(|e| Error::format(format!("{location}: quiver"), e.to_string()))?;
    let mut relations = Vec::with_capacity(doc.relations.len());
    for (r, rel) in doc.relations.iter().enumerate() {
        let mut terms = Vec::with_capacity(rel.len());
        for (t, term) in rel.iter().enumerate() {
            let at = format!("{location}: relations[{r}][{t}]");
            let coef = field.parse(&term.coef).map_err(|e| Error::format(format!("{at}.coef"), e.to_string()))?;
            let names: Vec<&str> = term.path.iter().map(String::as_str).collect();
            let path = quiver.path(&names).map_err(|e| Error::format(format!("{at}.path"), e.to_string()))?;
            terms.push(Term { coef, path });
        }
        relations.push(Relation::new(terms));
    }
    let mut pres = AlgebraPresentation::new(field, quiver, relations, doc.nilpotency_bound);
    if let Some(name) = &doc.name {
        pres = pres.named(name.clone());
    }
    Algebra::build(pres).map_err(|e| match e {
        Error::Format { .. } => e,
        other => Error::format(location.to_string(), other.to_string()),
    })
}

pub fn algebra_to_doc(alg: &Algebra) -> AlgebraDoc {
    let pres = alg.presentation();
    let q = &pres.quiver;
    let field = match pres.field {
        FieldSpec::Prime(p) => FieldDoc { p: Some(u64::from(p)), rationals: None },
        FieldSpec::Rationals => FieldDoc { p: None, rationals: Some(true) },
    };
    AlgebraDoc {
        name: pres.name.clone(),
        field,
        quiver: QuiverDoc {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowDoc {
                    name: a.name.clone(),
                    from: q.vertices()[a.source].clone(),
                    to: q.vertices()[a.target].clone(),
                })
                .collect(),
        },
        relations: pres
            .relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|t| TermDoc {
                        coef: t.coef.to_string(),
                        path: t.path.arrows().iter().map(|&a| q.arrows()[a].name.clone()).collect(),
                    })
                    .collect()
            })
            .collect(),
        nilpotency_bound: pres.nilpotency_bound,
    }
}

pub fn parse_algebra(text: &str, location: &str) -> Result<Arc<Algebra>> {
    algebra_from_doc(&parse_json(text, location)?, location)
}

pub fn load_algebra(path: &Path) -> Result<Arc<Algebra>> {
    parse_algebra(&read(path)?, &path.display().to_string())
}

pub fn algebra_to_json(alg: &Algebra) -> String {
    to_json(&algebra_to_doc(alg))
}

/// Resolves an algebra reference; relative paths are taken from `base`.
pub fn resolve_algebra(r: &AlgebraRef, base: Option<&Path>, location: &str) -> Result<Arc<Algebra>> {
    match r {
        AlgebraRef::Inline(doc) => algebra_from_doc(doc, &format!("{location}: algebra")),
        AlgebraRef::Named(name) => match name.strip_prefix("builtin:") {
            Some(b) => fixtures::algebra(b).map_err(|e| Error::format(format!("{location}: algebra"), e.to_string())),
            None => {
                let path: PathBuf = match base {
                    Some(dir) => dir.join(name),
                    None => PathBuf::from(name),
                };
                load_algebra(&path)
            }
        },
    }
}

// ---- modules ----

pub fn module_from_parts(
    alg: &Arc<Algebra>,
    dims: &IndexMap<String, usize>,
    matrices: &IndexMap<String, Vec<Vec<String>>>,
    location: &str,
) -> Result<Representation> {
    let q = alg.quiver();
    for name in dims.keys() {
        if q.vertex_index(name).is_none() {
            return Err(Error::format(format!("{location}: dims.{name}"), "unknown vertex"));
        }
    }
    for name in matrices.keys() {
        if q.arrow_index(name).is_none() {
            return Err(Error::format(format!("{location}: matrices.{name}"), "unknown arrow"));
        }
    }
    let d: Vec<usize> = q
        .vertices()
        .iter()
        .map(|v| {
            dims.get(v)
                .copied()
                .ok_or_else(|| Error::format(format!("{location}: dims"), format!("missing vertex {v:?}")))
        })
        .collect::<Result<_>>()?;
    let field = alg.field();
    let mut maps = Vec::with_capacity(q.arrows().len());
    for a in q.arrows() {
        let (r, c) = (d[a.target], d[a.source]);
        let at = format!("{location}: matrices.{}", a.name);
        let rows = match matrices.get(&a.name) {
            Some(rows) => rows.as_slice(),
            None if r * c == 0 => &[],
            None => return Err(Error::format(at, format!("missing {r}x{c} matrix"))),
        };
        if rows.len() != r {
            return Err(Error::format(at, format!("expected {r} rows, found {}", rows.len())));
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::format(format!("{at}[{i}]"), format!("expected {c} entries, found {}", row.len())));
            }
            for (j, e) in row.iter().enumerate() {
                data.push(field.parse(e).map_err(|err| Error::format(format!("{at}[{i}][{j}]"), err.to_string()))?);
            }
        }
        maps.push(Matrix::new(field.clone(), r, c, data)?);
    }
    Representation::new(alg.clone(), d, maps).map_err(|e| Error::format(location.to_string(), e.to_string()))
}

#[allow(clippy::type_complexity)]
pub fn module_to_parts(m: &Representation) -> (IndexMap<String, usize>, IndexMap<String, Vec<Vec<String>>>) {
    let q = m.algebra().quiver();
    let dims = q.vertices().iter().cloned().zip(m.dims().iter().copied()).collect();
    let matrices = q.arrows().iter().zip(m.maps()).map(|(a, x)| (a.name.clone(), x.to_string_rows())).collect();
    (dims, matrices)
}

#[derive(Clone, Debug)]
pub struct LoadedModule {
    pub name: Option<String>,
    pub module: Representation,
    pub algebra_ref: AlgebraRef,
}

pub fn parse_module(text: &str, base: Option<&Path>, location: &str) -> Result<LoadedModule> {
    let doc: ModuleDoc = parse_json(text, location)?;
    let alg = resolve_algebra(&doc.algebra, base, location)?;
    let module = module_from_parts(&alg, &doc.dims, &doc.matrices, location)?;
    Ok(LoadedModule { name: doc.name, module, algebra_ref: doc.algebra })
}

pub fn load_module(path: &Path) -> Result<LoadedModule> {
    parse_module(&read(path)?, path.parent(), &path.display().to_string())
}

pub fn module_to_json(m: &Representation, name: Option<&str>, algebra: &AlgebraRef) -> String {
    let (dims, matrices) = module_to_parts(m);
    to_json(&ModuleDoc { algebra: algebra.clone(), name: name.map(str::to_string), dims, matrices })
}

/// Inline reference for an algebra, as written into emitted files.
pub fn inline_ref(alg: &Algebra) -> AlgebraRef {
    AlgebraRef::Inline(Box::new(algebra_to_doc(alg)))
}

// ---- corpora ----

pub fn parse_corpus(text: &str, base: Option<&Path>, location: &str) -> Result<(Corpus, AlgebraRef)> {
    let doc: CorpusDoc = parse_json(text, location)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::format(
            format!("{location}: schema_version"),
            format!("unsupported version {}", doc.schema_version),
        ));
    }
    let alg = resolve_algebra(&doc.algebra, base, location)?;
    let mut corpus = Corpus::new(alg.clone(), doc.provenance.clone());
    corpus.complete = doc.complete;
    for (i, m) in doc.modules.iter().enumerate() {
        let at = format!("{location}: modules[{i}]");
        let rep = module_from_parts(&alg, &m.dims, &m.matrices, &at)?;
        corpus.push(m.name.clone(), rep).map_err(|e| Error::format(at, e.to_string()))?;
    }
    Ok((corpus, doc.algebra))
}

pub fn load_corpus(path: &Path) -> Result<(Corpus, AlgebraRef)> {
    parse_corpus(&read(path)?, path.parent(), &path.display().to_string())
}

pub fn corpus_to_json(corpus: &Corpus, algebra: &AlgebraRef) -> String {
    let modules = corpus
        .members()
        .iter()
        .map(|(name, m)| {
            let (dims, matrices) = module_to_parts(m);
            MemberDoc { name: name.clone(), dims, matrices }
        })
        .collect();
    to_json(&CorpusDoc {
        schema_version: SCHEMA_VERSION,
        algebra: algebra.clone(),
        provenance: corpus.provenance.clone(),
        complete: corpus.complete,
        modules,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip_is_byte_exact() {
        for name in fixtures::NAMES {
            let alg = fixtures::algebra(name).unwrap();
            let text = algebra_to_json(&alg);
            let again = parse_algebra(&text, "mem").unwrap();
            assert!(again.same_as(&alg));
            assert_eq!(algebra_to_json(&again), text);
        }
    }

    #[test]
    fn module_round_trip_is_byte_exact() {
        let corpus = fixtures::indecomposables("NAK3").unwrap();
        let r = AlgebraRef::Named("builtin:NAK3".into());
        for (name, m) in corpus.members() {
            let text = module_to_json(m, Some(name), &r);
            let back = parse_module(&text, None, "mem").unwrap();
            assert_eq!(&back.module, m);
            assert_eq!(module_to_json(&back.module, back.name.as_deref(), &back.algebra_ref), text);
        }
    }

    #[test]
    fn corpus_round_trip_is_byte_exact() {
        let corpus = fixtures::indecomposables("CNAK2").unwrap();
        let r = inline_ref(corpus.algebra());
        let text = corpus_to_json(&corpus, &r);
        let (back, r2) = parse_corpus(&text, None, "mem").unwrap();
        assert_eq!(back.members(), corpus.members());
        assert_eq!(corpus_to_json(&back, &r2), text);
    }

    #[test]
    fn errors_carry_locations() {
        let bad = r#"{"algebra":"builtin:A2","dims":{"1":1,"2":1},"matrices":{"a":[["x"]]}}"#;
        let err = parse_module(bad, None, "m.json").unwrap_err().to_string();
        assert!(err.contains("matrices.a[0][0]"), "{err}");
        let shape = r#"{"algebra":"builtin:A2","dims":{"1":1,"2":1},"matrices":{"a":[["1","2"]]}}"#;
        let err = parse_module(shape, None, "m.json").unwrap_err().to_string();
        assert!(err.contains("matrices.a[0]"), "{err}");
        let syntax = parse_module("{", None, "m.json").unwrap_err().to_string();
        assert!(syntax.starts_with("m.json:1:"), "{syntax}");
    }

    #[test]
    fn relation_violation_is_rejected() {
        // NAK3 with b∘a nonzero
        let bad = r#"{"algebra":"builtin:NAK3","dims":{"1":1,"2":1,"3":1},"matrices":{"a":[["1"]],"b":[["1"]]}}"#;
        assert!(parse_module(bad, None, "m.json").is_err());
    }
}
