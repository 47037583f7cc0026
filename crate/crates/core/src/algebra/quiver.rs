use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::Presentation(format!("duplicate vertex name {v:?}")));
            }
        }
        let mut seen = HashSet::new();
        for a in &arrows {
            if !seen.insert(a.name.as_str()) {
                return Err(Error::Presentation(format!("duplicate arrow name {:?}", a.name)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Presentation(format!("arrow {:?} has an invalid endpoint", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from `(name, from, to)` triples referring to vertex names.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let lookup = |n: &str| {
            vertices.iter().position(|v| v == n).ok_or_else(|| Error::Presentation(format!("unknown vertex {n:?}")))
        };
        let arrows = arrows
            .iter()
            .map(|&(name, from, to)| Ok(Arrow { name: name.to_string(), source: lookup(from)?, target: lookup(to)? }))
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vertices, arrows)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The quiver with every arrow reversed; names and indices are kept.
    pub fn opposite(&self) -> Quiver {
        let arrows =
            self.arrows.iter().map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source }).collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// The path through the named arrows, listed in application order.
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let arrows = names
            .iter()
            .map(|n| self.arrow_index(n).ok_or_else(|| Error::Presentation(format!("unknown arrow {n:?}"))))
            .collect::<Result<Vec<_>>>()?;
        self.path_from_arrows(arrows)
    }

    pub fn path_from_arrows(&self, arrows: Vec<usize>) -> Result<Path> {
        let Some(&first) = arrows.first() else {
            return Err(Error::Presentation("a nontrivial path needs at least one arrow".into()));
        };
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(Error::Presentation(format!(
                    "arrows {:?} and {:?} do not compose",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        let source = self.arrows[first].source;
        let target = self.arrows[*arrows.last().unwrap()].target;
        Ok(Path { source, target, arrows })
    }

    pub fn describe_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// A path in a quiver. Arrows are listed in application order, so the first
/// arrow is applied first. Length zero is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub(crate) source: usize,
    pub(crate) target: usize,
    pub(crate) arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    /// True for the trivial paths `e_v`.
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `then`, if the endpoints match.
    pub fn then(&self, then: &Path) -> Option<Path> {
        if self.target != then.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Some(Path { source: self.source, target: then.target, arrows })
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { source: self.target, target: self.source, arrows }
    }
}

/// Length first, then lexicographic by arrow index; trivial paths by vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
