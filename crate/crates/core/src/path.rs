//! Paths through the modified Hasse diagram and their signs.

use std::fmt;

use crate::error::{Error, Result};
use crate::hasse::{arrow_sign, ModifiedHasseDiagram};
use crate::simplex::Simplex;

/// Direction of a step relative to the diagram arrow it uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Traversal {
    Forward,
    Backward,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step<'a> {
    pub from: &'a Simplex,
    pub to: &'a Simplex,
    pub traversal: Traversal,
}

/// A walk along arrows of the modified Hasse diagram, each step changing
/// dimension by one. Traversal flags are stored per step.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    nodes: Vec<Simplex>,
    traversals: Vec<Traversal>,
}

impl Path {
    /// Builds a path through `h`, deriving each traversal flag.
    pub fn new(nodes: Vec<Simplex>, h: &ModifiedHasseDiagram) -> Result<Self> {
        if nodes.len() < 2 {
            return Err(Error::MalformedPath("a path needs at least one step".into()));
        }
        let traversals = nodes
            .windows(2)
            .map(|w| h.traversal(&w[0], &w[1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Path { nodes, traversals })
    }

    /// Builds a path from explicit flags. Only the facet structure is
    /// checked, not membership in any diagram.
    pub fn from_parts(nodes: Vec<Simplex>, traversals: Vec<Traversal>) -> Result<Self> {
        if nodes.len() < 2 || traversals.len() + 1 != nodes.len() {
            return Err(Error::MalformedPath(format!(
                "{} simplices need {} traversal flags, got {}",
                nodes.len(),
                nodes.len().saturating_sub(1),
                traversals.len()
            )));
        }
        for w in nodes.windows(2) {
            if w[0].facet_position(&w[1]).is_none() && w[1].facet_position(&w[0]).is_none() {
                return Err(Error::MalformedPath(format!(
                    "{} and {} are not a facet pair",
                    w[0], w[1]
                )));
            }
        }
        Ok(Path { nodes, traversals })
    }

    pub(crate) fn from_parts_unchecked(nodes: Vec<Simplex>, traversals: Vec<Traversal>) -> Self {
        debug_assert_eq!(nodes.len(), traversals.len() + 1);
        Path { nodes, traversals }
    }

    pub fn nodes(&self) -> &[Simplex] {
        &self.nodes
    }

    pub fn traversals(&self) -> &[Traversal] {
        &self.traversals
    }

    pub fn steps(&self) -> impl Iterator<Item = Step<'_>> {
        self.nodes.windows(2).zip(&self.traversals).map(|(w, t)| Step {
            from: &w[0],
            to: &w[1],
            traversal: *t,
        })
    }

    pub fn first(&self) -> &Simplex {
        &self.nodes[0]
    }

    pub fn last(&self) -> &Simplex {
        self.nodes.last().expect("nonempty")
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.traversals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traversals.is_empty()
    }

    /// `dim(first) − dim(last)`.
    pub fn index(&self) -> isize {
        self.first().dim() as isize - self.last().dim() as isize
    }

    pub fn backward_count(&self) -> usize {
        self.traversals.iter().filter(|t| **t == Traversal::Backward).count()
    }

    fn rises(&self, i: usize) -> bool {
        self.nodes[i + 1].dim() > self.nodes[i].dim()
    }

    /// Every step forward and never two dimension-raising steps in a row.
    pub fn is_legal(&self) -> bool {
        self.backward_count() == 0 && !(1..self.len()).any(|i| self.rises(i - 1) && self.rises(i))
    }

    /// Positions `i` at which steps `i` and `i + 1` both lower the dimension.
    pub fn double_drops(&self) -> Vec<usize> {
        (0..self.len().saturating_sub(1))
            .filter(|&i| !self.rises(i) && !self.rises(i + 1))
            .collect()
    }

    /// Sub-path over steps `start..end`.
    pub fn segment(&self, start: usize, end: usize) -> Result<Path> {
        if start >= end || end > self.len() {
            return Err(Error::MalformedPath(format!(
                "segment {start}..{end} out of range for a path of length {}",
                self.len()
            )));
        }
        Ok(Path {
            nodes: self.nodes[start..=end].to_vec(),
            traversals: self.traversals[start..end].to_vec(),
        })
    }

    pub(crate) fn into_parts(self) -> (Vec<Simplex>, Vec<Traversal>) {
        (self.nodes, self.traversals)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.nodes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.nodes.iter().enumerate() {
            if i > 0 {
                let arrow = match self.traversals[i - 1] {
                    Traversal::Forward => "->",
                    Traversal::Backward => "~>",
                };
                f.write_str(arrow)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Parses a whitespace- or comma-separated simplex sequence such as
/// `1-2-3 1-2 1`.
pub fn parse_simplex_sequence(text: &str) -> Result<Vec<Simplex>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// `θ(P) = (∏ θ(a)) · (−1)^((ℓ − Ind)/2)`.
///
/// Each step contributes the sign of the arrow it uses whichever way it is
/// traversed.
pub fn path_sign(p: &Path) -> i8 {
    let mut sign: i8 = 1;
    for w in p.nodes.windows(2) {
        let (big, small) = if w[0].dim() > w[1].dim() {
            (&w[0], &w[1])
        } else {
            (&w[1], &w[0])
        };
        sign *= arrow_sign(big, small).expect("path steps are facet pairs");
    }
    let excess = p.len() as isize - p.index();
    debug_assert!(excess >= 0 && excess % 2 == 0);
    if (excess / 2) % 2 == 1 {
        -sign
    } else {
        sign
    }
}

/// Concatenation of `p1` and `p2`; the last simplex of `p1` must be the
/// first of `p2`.
pub fn compose(p1: &Path, p2: &Path) -> Result<Path> {
    if p1.last() != p2.first() {
        return Err(Error::EndpointMismatch {
            first: p1.last().clone(),
            second: p2.first().clone(),
        });
    }
    let mut nodes = p1.nodes.clone();
    nodes.extend_from_slice(&p2.nodes[1..]);
    let mut traversals = p1.traversals.clone();
    traversals.extend_from_slice(&p2.traversals);
    Ok(Path { nodes, traversals })
}

/// The unique position of a double drop in an index-2 path, judged by
/// dimension alone.
pub fn find_double_drop(p: &Path) -> Result<usize> {
    if p.index() != 2 {
        return Err(Error::MalformedPath(format!(
            "expected index 2, path {p} has index {}",
            p.index()
        )));
    }
    match p.double_drops().as_slice() {
        [i] => Ok(*i),
        [] => Err(Error::MalformedPath(format!("{p} has no double drop"))),
        many => Err(Error::MalformedPath(format!("{p} has {} double drops", many.len()))),
    }
}
