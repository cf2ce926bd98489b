use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex identifier. The numeric order of ids is the global vertex order
/// that fixes every orientation.
pub type Vertex = u32;

/// A simplex in canonical form: a strictly increasing, nonempty vertex list.
///
/// Ordering is lexicographic on the vertex list, which is the per-dimension
/// iteration order used everywhere else.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Duplicates are rejected.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedSimplex("empty vertex set".into()));
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedSimplex(format!("vertex {} repeated", w[0])));
        }
        Ok(Simplex(vertices))
    }

    /// Builds a simplex from an already strictly increasing list.
    pub fn from_sorted(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedSimplex("empty vertex set".into()));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedSimplex(format!(
                "vertices {vertices:?} are not strictly increasing"
            )));
        }
        Ok(Simplex(vertices))
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// `self` with the vertex at sorted position `i` removed.
    pub fn remove_at(&self, i: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(i);
        Simplex(v)
    }

    /// `self` with `v` added; `None` if already present.
    pub fn with_vertex(&self, v: Vertex) -> Option<Simplex> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                Some(Simplex(out))
            }
        }
    }

    /// Every facet, in the order of the removed vertex position.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        (0..self.0.len()).map(|i| self.remove_at(i)).collect()
    }

    /// Position of the vertex whose removal yields `face`, if `face` is a facet.
    pub fn facet_position(&self, face: &Simplex) -> Option<usize> {
        if face.0.len() + 1 != self.0.len() {
            return None;
        }
        let pos = (0..face.0.len())
            .find(|&i| self.0[i] != face.0[i])
            .unwrap_or(face.0.len());
        (self.0[..pos] == face.0[..pos] && self.0[pos + 1..] == face.0[pos..]).then_some(pos)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Simplex {
    type Err = Error;

    /// Parses the hyphen-joined form, e.g. `1-2-3`.
    fn from_str(s: &str) -> Result<Self> {
        let vertices = s
            .trim()
            .split('-')
            .map(|part| {
                part.parse::<Vertex>()
                    .map_err(|_| Error::MalformedSimplex(format!("bad vertex {part:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Simplex::from_sorted(vertices)
    }
}

/// Shorthand for tests and presets; panics on malformed input.
pub fn simplex(vertices: &[Vertex]) -> Simplex {
    Simplex::new(vertices.to_vec()).expect("valid simplex literal")
}
