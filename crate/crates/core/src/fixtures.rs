//! Built-in algebras over 𝔽_101 with their complete lists of
//! indecomposable modules:
//!
//! - `A2`: `1 -a-> 2`, hereditary;
//! - `LOOP2`: `k[x]/(x²)`, local and self-injective;
//! - `NAK3`: `1 -a-> 2 -b-> 3` with `b∘a = 0`, global dimension 2;
//! - `CNAK2`: `1 ⇄ 2` with all paths of length 2 zero, self-injective.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{Algebra, Representation};
use crate::bounds::Corpus;
use crate::error::{Error, Result};
use crate::io;

pub const NAMES: [&str; 4] = ["A2", "LOOP2", "NAK3", "CNAK2"];

fn sources(name: &str) -> Option<(&'static str, &'static str)> {
    Some(match name {
        "A2" => (include_str!("../fixtures/a2.algebra.json"), include_str!("../fixtures/a2.indecomposables.json")),
        "LOOP2" => {
            (include_str!("../fixtures/loop2.algebra.json"), include_str!("../fixtures/loop2.indecomposables.json"))
        }
        "NAK3" => {
            (include_str!("../fixtures/nak3.algebra.json"), include_str!("../fixtures/nak3.indecomposables.json"))
        }
        "CNAK2" => {
            (include_str!("../fixtures/cnak2.algebra.json"), include_str!("../fixtures/cnak2.indecomposables.json"))
        }
        _ => return None,
    })
}

fn canonical(name: &str) -> Result<&'static str> {
    NAMES
        .iter()
        .find(|n| n.eq_ignore_ascii_case(name))
        .copied()
        .ok_or_else(|| Error::Presentation(format!("unknown built-in algebra {name:?} (known: {})", NAMES.join(", "))))
}

/// The named built-in algebra; built once per process.
pub fn algebra(name: &str) -> Result<Arc<Algebra>> {
    static CACHE: OnceLock<Mutex<HashMap<&'static str, Arc<Algebra>>>> = OnceLock::new();
    let name = canonical(name)?;
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(a) = cache.lock().expect("fixture lock").get(name) {
        return Ok(a.clone());
    }
    let (text, _) = sources(name).expect("known fixture");
    let alg = io::parse_algebra(text, &format!("builtin:{name}"))?;
    Ok(cache.lock().expect("fixture lock").entry(name).or_insert(alg).clone())
}

/// The complete list of indecomposables, as a corpus marked complete.
pub fn indecomposables(name: &str) -> Result<Corpus> {
    let name = canonical(name)?;
    let (_, text) = sources(name).expect("known fixture");
    Ok(io::parse_corpus(text, None, &format!("builtin:{name}"))?.0)
}

/// One named indecomposable, e.g. `module("NAK3", "S1")`.
pub fn module(algebra: &str, member: &str) -> Result<Representation> {
    let corpus = indecomposables(algebra)?;
    corpus
        .get(member)
        .cloned()
        .ok_or_else(|| Error::Representation(format!("no module {member:?} in the {algebra} fixture")))
}
